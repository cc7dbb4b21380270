"""
Exact arithmetic in k = F_p(α) and in its purely inseparable extension
E = k[γ]/(γ^p - α).

Rational functions in α are elements of sympy's fraction field over GF(p),
kept reduced by sympy with numerators and denominators in F_p[α].
Elements of E are TowerElement values with p coordinates in k.
"""

from functools import lru_cache

from sympy import GF, isprime
from sympy.polys.fields import field
from sympy.polys.polyerrors import CoercionFailed

from picdescent.exceptions import InconsistentDataError, InputError


@lru_cache(maxsize=None)
def rational_functions(p):
    """(F_p(α), α)."""
    _check_prime(p)
    K, alpha = field('alpha', GF(p))
    return K, alpha


def _check_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise InputError(f'characteristic must be a prime, got {p!r}')


class Tower:
    """The field E = F_p(α)[γ]/(γ^p - α)."""

    def __init__(self, p):
        self.p = p
        self.base, self.alpha = rational_functions(p)

    def element(self, value):
        """Coerce an int, a rational function or a TowerElement into E."""
        if isinstance(value, TowerElement):
            if value.tower is not self:
                raise InputError('element belongs to a different tower')
            return value
        if isinstance(value, (list, tuple)):
            return TowerElement(self, value)
        return TowerElement(self, [value])

    @property
    def zero(self):
        return TowerElement(self, [])

    @property
    def one(self):
        return TowerElement(self, [1])

    @property
    def gamma(self):
        return TowerElement(self, [0, 1])

    def __repr__(self):
        return f'F_{self.p}(alpha)[gamma]/(gamma^{self.p} - alpha)'


@lru_cache(maxsize=None)
def tower(p):
    return Tower(p)


class TowerElement:
    """
    sum_i c_i·γ^i with c_i in F_p(α), 0 <= i < p.
    """

    __slots__ = ('tower', 'coordinates')

    def __init__(self, tower, coordinates):
        p = tower.p
        coordinates = list(coordinates)
        if len(coordinates) > p:
            raise InputError(f'an element of the tower has at most {p} coordinates')
        K = tower.base
        coordinates = [K(c) for c in coordinates] + [K.zero] * (p - len(coordinates))
        self.tower = tower
        self.coordinates = tuple(coordinates)

    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.tower is not self.tower:
                raise InputError('elements of different towers')
            return other
        try:
            return TowerElement(self.tower, [other])
        except (CoercionFailed, TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElement(self.tower, [a + b for a, b in zip(self.coordinates, other.coordinates)])

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, [-a for a in self.coordinates])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.tower.p
        alpha = self.tower.alpha
        out = [self.tower.base.zero] * p
        for i, a in enumerate(self.coordinates):
            if not a:
                continue
            for j, b in enumerate(other.coordinates):
                if not b:
                    continue
                # γ^p = α
                if i + j < p:
                    out[i + j] += a * b
                else:
                    out[i + j - p] += alpha * a * b
        return TowerElement(self.tower, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius_norm(self):
        """e^p, which lies in F_p(α): (sum c_i γ^i)^p = sum c_i^p α^i."""
        alpha = self.tower.alpha
        p = self.tower.p
        return sum((c ** p * alpha ** i for i, c in enumerate(self.coordinates)), self.tower.base.zero)

    def inverse(self):
        if not self:
            raise InconsistentDataError('zero has no inverse')
        norm = self.frobenius_norm()
        return self ** (self.tower.p - 1) * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return any(bool(c) for c in self.coordinates)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coordinates == other.coordinates

    def __hash__(self):
        return hash(self.coordinates)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coordinates):
            if not c:
                continue
            if i == 0:
                terms.append(f'({c})')
            else:
                terms.append(f'({c})*gamma' + (f'^{i}' if i > 1 else ''))
        return ' + '.join(terms) if terms else '0'
