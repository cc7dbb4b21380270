"""
Picard groups of curves glued along a conductor square.

For A ⊂ B with conductor I, the units sequence gives

    Pic(A) ≅ (B/I)* / ((A/I)*·U),  U = image of B*,

whenever Pic(B) = 0. Two families are covered, both with B/I = D[t]/(t²):

- the cusp k[T², T³] ⊂ k[T], conductor T²·k[T], t = T;
- the node-like ring D + (x-1)²B inside B = D[x, x⁻¹], t = x - 1, for
  D = Q or D = Z[1/m].

In both, (B/I)* = D* × (1 + t·D) and (A/I)* = D*, so Pic(A) is (D, +)
modulo the t-coefficients of U.
"""

import logging
import re
from collections import namedtuple
from fractions import Fraction

from sympy import factorint, primefactors

from picdescent.exceptions import InconsistentDataError, InputError

from .models import AdditiveGroupOfField, PrimaryDivisibleSum, RationalsModZ

logger = logging.getLogger(__name__)

TorsionCensus = namedtuple('TorsionCensus', ['size', 'cyclic', 'largest_order'])


# Coefficient rings

class RationalField:
    characteristic = 0
    name = 'Q'

    def contains(self, value):
        return isinstance(value, (int, Fraction))

    def is_unit(self, value):
        return self.contains(value) and value != 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class FiniteField:
    """F_q descriptor; elements are never built, only the order is used."""

    def __init__(self, order):
        order = int(order)
        if order < 2:
            raise InputError(f'no field has {order} elements')
        factors = factorint(order)
        if len(factors) != 1:
            raise InputError(f'{order} is not a prime power')
        (self.characteristic, self.degree), = factors.items()
        self.order = order
        self.name = f'F_{order}'

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.order == other.order

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class LocalizedIntegers:
    """Z[1/m]: fractions whose denominators have only prime factors of m."""
    characteristic = 0

    def __init__(self, m):
        m = int(m)
        if m < 2:
            raise InputError(f'Z[1/m] needs m >= 2, got {m}')
        self.m = m
        self.primes = frozenset(primefactors(m))
        self.name = f'Z[1/{m}]'

    def contains(self, value):
        value = Fraction(value)
        return set(primefactors(value.denominator)) <= self.primes

    def is_unit(self, value):
        return value != 0 and self.contains(value) and self.contains(1 / Fraction(value))

    def __eq__(self, other):
        return isinstance(other, LocalizedIntegers) and self.primes == other.primes

    def __hash__(self):
        return hash(self.primes)

    def __repr__(self):
        return self.name


_FINITE_FIELD = re.compile(r'^(?:F_?|GF\()(\d+)\)?$')
_LOCALIZED = re.compile(r'^Z\[1/(\d+)\]$')


def parse_field(text):
    """'Q', 'F_9', 'F9' or 'GF(9)'."""
    text = str(text).strip()
    if text in ('Q', 'QQ'):
        return RationalField()
    match = _FINITE_FIELD.match(text)
    if match:
        return FiniteField(int(match.group(1)))
    raise InputError(f'unknown field {text!r}')


def parse_ring(text):
    """'Q' or 'Z[1/m]'."""
    text = str(text).strip()
    if text in ('Q', 'QQ'):
        return RationalField()
    match = _LOCALIZED.match(text.replace(' ', ''))
    if match:
        return LocalizedIntegers(int(match.group(1)))
    raise InputError(f'unknown coefficient ring {text!r}')


# Dual numbers

class DualNumber:
    """a + b·t in D[t]/(t²) with exact rational coefficients."""

    __slots__ = ('a', 'b')

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __mul__(self, other):
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    def inverse(self):
        if self.a == 0:
            raise InconsistentDataError(f'{self} is not a unit')
        return DualNumber(1 / self.a, -self.b / (self.a * self.a))

    def __pow__(self, j):
        base = self if j >= 0 else self.inverse()
        out = DualNumber(1)
        for _ in range(abs(j)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, DualNumber) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f'{self.a} + {self.b}t'


# Families

class ConductorSquareSpec:
    family = None

    def residue_units(self):
        """A description of (B/I)*."""
        raise NotImplementedError

    def unit_quotient(self):
        raise NotImplementedError


class Cusp(ConductorSquareSpec):
    """k[T², T³] ⊂ k[T], glued along T² for a field k = Q or F_q."""
    family = 'cusp'

    def __init__(self, field):
        if isinstance(field, str):
            field = parse_field(field)
        if not isinstance(field, (RationalField, FiniteField)):
            raise InputError(f'the cusp family needs a field, got {field!r}')
        self.field = field

    def residue_units(self):
        return f'({self.field.name}[t]/(t²))* = {self.field.name}* × (1 + t·{self.field.name})'

    def residue_unit_count(self):
        """|(k[t]/t²)*| = (q-1)·q over F_q; None over Q."""
        if isinstance(self.field, RationalField):
            return None
        q = self.field.order
        return (q - 1) * q

    def unit_quotient(self):
        # B* = k* lands inside (A/I)* = k*, so only 1 + t·k survives
        if isinstance(self.field, RationalField):
            return AdditiveGroupOfField(0)
        return AdditiveGroupOfField(self.field.characteristic, self.field.degree)

    def __repr__(self):
        return f'Cusp({self.field!r})'


class NodeLikeUnitQuotient(ConductorSquareSpec):
    """
    A = D + (x-1)²B inside B = D[x, x⁻¹].

    B* = {u·x^j : u ∈ D*, j ∈ Z} maps to (u, 1 + j·t) in (B/I)*. For
    D = Z[1/m] this uses D* = ±<primes of m>.
    """
    family = 'node'

    def __init__(self, ring):
        if isinstance(ring, str):
            ring = parse_ring(ring)
        if not isinstance(ring, (RationalField, LocalizedIntegers)):
            raise InputError(f'the node family needs Q or Z[1/m], got {ring!r}')
        self.ring = ring

    def residue_units(self):
        D = self.ring.name
        return f'({D}[t]/(t²))* = {D}* × (1 + t·{D})'

    @staticmethod
    def unit_image(j, u=1):
        """The image of u·x^j in B/I, computed as u·(1 + t)^j."""
        return DualNumber(u) * DualNumber(1, 1) ** j

    def check_unit_images(self, exponents=range(-6, 7)):
        """x^j ≡ 1 + j·t for each j, so U is generated by D* and 1 + Z·t."""
        for j in exponents:
            image = self.unit_image(j)
            if image != DualNumber(1, j):
                logger.debug('x^%d maps to %s', j, image)
                return False
        return True

    def pic_class(self, element):
        """
        The class of a residue unit a + b·t in Pic(A), as b/a mod 1.

        Dividing by a ∈ (A/I)* leaves 1 + (b/a)·t; U shifts b/a by integers.
        """
        if not self.ring.is_unit(element.a) or not self.ring.contains(element.b):
            raise InputError(f'{element} is not a unit of {self.ring.name}[t]/(t²)')
        return (element.b / element.a) % 1

    def unit_quotient(self):
        """
        Q/Z over Q, or the sum of Z_{p^∞} over the primes of m over Z[1/m].

        The value is asserted from the structure of B* and (B/I)*, not
        derived: only x^j -> 1 + j·t for j in -6..6 is checked before it is
        returned. `fraction_torsion_oracle` checks its n-torsion separately.
        """
        if not self.check_unit_images():
            raise InconsistentDataError('powers of x do not map to 1 + j·t')
        if isinstance(self.ring, RationalField):
            return RationalsModZ()
        return PrimaryDivisibleSum(self.ring.primes)

    def __repr__(self):
        return f'NodeLikeUnitQuotient({self.ring!r})'


def conductor_square_pic(spec):
    """Pic(A) for one of the conductor-square families."""
    if not isinstance(spec, ConductorSquareSpec):
        raise InputError(f'unsupported family {spec!r}')
    result = spec.unit_quotient()
    logger.debug('%r: Pic = %s', spec, result.description)
    return result


def pic_torsion(description, n):
    return description.torsion(n)


def fraction_torsion_oracle(m, n):
    """
    Count the classes a/n mod Z lying in Z[1/m]/Z (in Q/Z when m is None)
    by enumeration.
    """
    if n < 1:
        raise InputError('n must be positive')
    ring = RationalField() if m is None else LocalizedIntegers(m)
    orders = []
    for a in range(n):
        x = Fraction(a, n)
        if ring.contains(x):
            orders.append(x.denominator)
    largest = max(orders)
    # a finite subgroup of Q/Z is cyclic iff some element has full order
    return TorsionCensus(len(orders), largest == len(orders), largest)
