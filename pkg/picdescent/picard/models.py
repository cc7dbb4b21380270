"""
Unit-group models for descent kernels and symbolic descriptions of Picard
groups.
"""

from math import gcd

from sympy import factorint, isprime

from picdescent.exceptions import InconsistentDataError, InputError
from picdescent.gmodules.constructions import direct_sum, trivial_module
from picdescent.zlattice.models import FgAbelianGroup, torsion_subgroup


class UnitModel:
    """
    A unit group Γ(Y)* split as a G-module into three parts:

    - `hilbert90_trivial_parts` field-unit summands on which G acts
      faithfully; their H^1 vanishes and they are only counted.
    - `lattice_part`, a G-module on a free abelian group.
    - `finite_part`, a G-module on a finite abelian group.

    The split itself is the caller's assertion.
    """

    def __init__(self, group, hilbert90_trivial_parts=0, lattice_part=None, finite_part=None, name=None):
        if hilbert90_trivial_parts < 0:
            raise InputError('hilbert90_trivial_parts must be non-negative')
        for label, part in (('lattice_part', lattice_part), ('finite_part', finite_part)):
            if part is not None and part.group != group:
                raise InconsistentDataError(f'{label} is a module over a different group')
        if lattice_part is not None and not lattice_part.underlying.is_torsion_free():
            raise InconsistentDataError('lattice_part must be torsion-free')
        if finite_part is not None and not finite_part.underlying.is_finite():
            raise InconsistentDataError('finite_part must be finite')
        self.group = group
        self.hilbert90_trivial_parts = hilbert90_trivial_parts
        self.lattice_part = lattice_part
        self.finite_part = finite_part
        self.name = name or 'unit model'

    @property
    def module(self):
        """lattice_part ⊕ finite_part, the summands visible to H^1."""
        parts = [p for p in (self.lattice_part, self.finite_part) if p is not None]
        if not parts:
            return trivial_module(self.group, FgAbelianGroup.trivial(), name='0')
        if len(parts) == 1:
            return parts[0]
        return direct_sum(parts)

    def __repr__(self):
        return (f'UnitModel({self.name}: {self.group}, {self.hilbert90_trivial_parts} field parts, '
                f'lattice={getattr(self.lattice_part, "name", None)}, '
                f'finite={getattr(self.finite_part, "name", None)})')


def _check_index(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f'torsion index must be a positive integer, got {n!r}')


class PicDescription:
    """
    A Picard group, finite or divisible, that answers n-torsion queries
    exactly.
    """
    kind = None

    def torsion(self, n):
        raise NotImplementedError

    def exponent(self):
        """Least e > 0 with e·Pic = 0, or None when there is none."""
        raise NotImplementedError

    def is_finite(self):
        raise NotImplementedError

    def is_torsion(self):
        raise NotImplementedError

    @property
    def description(self):
        raise NotImplementedError

    def __str__(self):
        return self.description

    def __repr__(self):
        return f'{type(self).__name__}({self.description})'


class FinitePic(PicDescription):
    kind = 'finite'

    def __init__(self, group):
        if not group.is_finite():
            raise InputError(f'{group} is not finite')
        self.group = group

    def torsion(self, n):
        _check_index(n)
        return torsion_subgroup(self.group, n)

    def exponent(self):
        return self.group.exponent()

    def is_finite(self):
        return True

    def is_torsion(self):
        return True

    @property
    def description(self):
        return str(self.group)

    def __eq__(self, other):
        return isinstance(other, FinitePic) and self.group == other.group

    def __hash__(self):
        return hash((self.kind, self.group))


class RationalsModZ(PicDescription):
    """Q/Z: its n-torsion is (1/n)Z/Z, cyclic of order n."""
    kind = 'q_mod_z'

    def torsion(self, n):
        _check_index(n)
        return FgAbelianGroup.cyclic(n)

    def exponent(self):
        return None

    def is_finite(self):
        return False

    def is_torsion(self):
        return True

    @property
    def description(self):
        return 'Q/Z'

    def __eq__(self, other):
        return isinstance(other, RationalsModZ)

    def __hash__(self):
        return hash(self.kind)


def supported_part(n, primes):
    """The largest divisor of n whose prime factors all lie in `primes`."""
    out = 1
    for p, k in factorint(n).items():
        if p in primes:
            out *= p ** k
    return out


class PrimaryDivisibleSum(PicDescription):
    """
    ⊕_{p in primes} Z_{p^∞}, which is Z[1/m]/Z for m with these prime
    factors.
    """
    kind = 'primary_divisible'

    def __init__(self, primes):
        primes = frozenset(int(p) for p in primes)
        bad = sorted(p for p in primes if not isprime(p))
        if bad:
            raise InputError(f'not prime: {bad}')
        self.primes = primes

    def torsion(self, n):
        _check_index(n)
        return FgAbelianGroup.cyclic(supported_part(n, self.primes))

    def exponent(self):
        return 1 if not self.primes else None

    def is_finite(self):
        return not self.primes

    def is_torsion(self):
        return True

    @property
    def description(self):
        if not self.primes:
            return '0'
        return ' ⊕ '.join(f'Z_{p}^∞' for p in sorted(self.primes))

    def __eq__(self, other):
        return isinstance(other, PrimaryDivisibleSum) and self.primes == other.primes

    def __hash__(self):
        return hash((self.kind, self.primes))


class AdditiveGroupOfField(PicDescription):
    """
    (k, +) for k = Q (characteristic 0) or k = F_{p^e}.

    Over F_{p^e} the group is (Z/p)^e; over Q it is torsion-free.
    """
    kind = 'additive_field'

    def __init__(self, characteristic=0, degree=1):
        if characteristic and not isprime(characteristic):
            raise InputError(f'characteristic {characteristic} is not prime')
        if degree < 1:
            raise InputError('field degree must be at least 1')
        self.characteristic = characteristic
        self.degree = degree if characteristic else 1

    @property
    def field_order(self):
        return self.characteristic ** self.degree if self.characteristic else None

    def finite_group(self):
        """(Z/p)^e, or None in characteristic 0."""
        if not self.characteristic:
            return None
        return FgAbelianGroup.from_invariants([self.characteristic] * self.degree)

    def torsion(self, n):
        _check_index(n)
        p = self.characteristic
        if not p or n % p:
            return FgAbelianGroup.trivial()
        return self.finite_group()

    def exponent(self):
        return self.characteristic or None

    def is_finite(self):
        return bool(self.characteristic)

    def is_torsion(self):
        return bool(self.characteristic)

    @property
    def description(self):
        if not self.characteristic:
            return '(Q, +)'
        return f'(F_{self.field_order}, +) ≅ {self.finite_group()}'

    def __eq__(self, other):
        return (isinstance(other, AdditiveGroupOfField)
                and (self.characteristic, self.degree) == (other.characteristic, other.degree))

    def __hash__(self):
        return hash((self.kind, self.characteristic, self.degree))


def is_torsion_monotone(description, a, b):
    """For a | b, check that the a-torsion sits inside the b-torsion."""
    if b % a:
        raise InputError(f'{a} does not divide {b}')
    small = description.torsion(a).invariant_factors
    large = description.torsion(b).invariant_factors
    if len(small) > len(large):
        return False
    # pad on the left: invariant factors are listed smallest first
    large = large[len(large) - len(small):]
    return all(gcd(s, l) == s for s, l in zip(small, large))
