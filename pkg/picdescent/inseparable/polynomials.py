"""
Dense univariate polynomials over a field whose elements support the
arithmetic operators, division included.

Coefficients are stored lowest degree first with trailing zeros stripped;
the zero polynomial has no coefficients and degree -1.
"""

from picdescent.exceptions import InputError


class Polynomial:

    __slots__ = ('coefficients', 'coerce', 'variable')

    def __init__(self, coefficients=(), coerce=None, variable='W'):
        coefficients = [coerce(c) for c in coefficients] if coerce else list(coefficients)
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self.coefficients = tuple(coefficients)
        self.coerce = coerce
        self.variable = variable

    def _new(self, coefficients):
        return Polynomial(coefficients, coerce=self.coerce, variable=self.variable)

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return self._new([other])

    @classmethod
    def monomial(cls, degree, coefficient=1, coerce=None, variable='W'):
        return cls([0] * degree + [coefficient], coerce=coerce, variable=variable)

    # Structure

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        if not self.coefficients:
            raise InputError('the zero polynomial has no leading coefficient')
        return self.coefficients[-1]

    def is_zero(self):
        return not self.coefficients

    def is_constant(self):
        return self.degree <= 0

    def __getitem__(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __bool__(self):
        return bool(self.coefficients)

    # Arithmetic

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return self._new([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self or not other:
            return self._new([])
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] = out[i + j] + a * b
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InputError('negative powers of polynomials are not polynomials')
        result = self._new([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise InputError('division by the zero polynomial')
        inverse = 1 / other.leading
        remainder = list(self.coefficients)
        quotient = [0] * max(len(remainder) - other.degree, 0)
        for shift in range(len(remainder) - other.degree - 1, -1, -1):
            factor = remainder[shift + other.degree] * inverse
            if not factor:
                continue
            quotient[shift] = factor
            for j, b in enumerate(other.coefficients):
                remainder[shift + j] = remainder[shift + j] - factor * b
        return self._new(quotient), self._new(remainder[:max(other.degree, 0)])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self:
            return self
        return self * (1 / self.leading)

    def gcd(self, other):
        """The monic greatest common divisor."""
        a, b = self, self._lift(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return self._new([i * c for i, c in enumerate(self.coefficients)][1:])

    def map_coefficients(self, f):
        return self._new([f(c) for c in self.coefficients])

    # Comparison

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self._lift(other)
        if len(self.coefficients) != len(other.coefficients):
            return False
        return all(a == b for a, b in zip(self.coefficients, other.coefficients))

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if not self:
            return '0'
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(f'{c!r}')
            elif i == 1:
                terms.append(f'{c!r}*{self.variable}')
            else:
                terms.append(f'{c!r}*{self.variable}^{i}')
        return ' + '.join(reversed(terms))
