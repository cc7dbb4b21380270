"""
The derivation δ on E = F_p(α)[γ] with δ(F_p(α)) = 0 and δ(γ) = γ, its
extension to E[W] by δ(W) = W - W^q, logarithmic derivatives
Δ(f) = δ(f)/f, and the class-separation test built on them.

Throughout, q = p^e > 2 and r = q/p. The element W stands for Z^r, so a
W-degree d is a Z-degree r·d.
"""

import logging
from collections import namedtuple
from itertools import combinations

from django.conf import settings
from sympy import GF, factorint
from sympy.polys.fields import field
from sympy.polys.rings import ring

from picdescent.exceptions import GuardExceeded, InconsistentDataError, InputError

from .fields import TowerElement, tower
from .polynomials import Polynomial

logger = logging.getLogger(__name__)

NOT_ISOMORPHIC = 'NOT_ISOMORPHIC'
INCONCLUSIVE = 'INCONCLUSIVE'

VERDICT_CHOICES = [
    (NOT_ISOMORPHIC, 'Not isomorphic'),
    (INCONCLUSIVE, 'Inconclusive'),
]

Separation = namedtuple('Separation', ['c1', 'c2', 'difference', 'degree', 'z_degree', 'nonconstant'])
ClassCensus = namedtuple('ClassCensus', ['p', 'q', 'separations', 'class_count'])


def check_parameters(p, q):
    """
    Validate (p, q) and return r = q/p.

    q must be a power of the prime p with 2 < q <= INSEPARABLE_MAX_Q, and
    the Z-degrees reached (r·q) must stay within INSEPARABLE_MAX_DEGREE.
    """
    if isinstance(q, bool) or not isinstance(q, int) or q <= 2:
        raise InputError('q > 2 required')
    tower(p)
    factors = factorint(q)
    if set(factors) != {p}:
        raise InputError(f'q = {q} is not a power of p = {p}')
    if q > settings.INSEPARABLE_MAX_Q:
        logger.warning('inseparable guard: q = %d exceeds %d', q, settings.INSEPARABLE_MAX_Q)
        raise GuardExceeded(f'q = {q} exceeds the limit of {settings.INSEPARABLE_MAX_Q}')
    r = q // p
    if r * q > settings.INSEPARABLE_MAX_DEGREE:
        logger.warning('inseparable guard: degree %d exceeds %d', r * q, settings.INSEPARABLE_MAX_DEGREE)
        raise GuardExceeded(f'degree {r * q} exceeds the limit of {settings.INSEPARABLE_MAX_DEGREE}')
    return r


def w_polynomial(p, coefficients):
    """A polynomial in W over E = F_p(α)[γ]."""
    return Polynomial(coefficients, coerce=tower(p).element, variable='W')


def delta(element):
    """δ(sum c_i γ^i) = sum i·c_i γ^i."""
    return TowerElement(element.tower, [i * c for i, c in enumerate(element.coordinates)])


def delta_w(f, q):
    """δ on E[W]: δ on coefficients, δ(W) = W - W^q, and the Leibniz rule."""
    coefficients = f.map_coefficients(delta)
    w = Polynomial.monomial(1, coerce=f.coerce, variable=f.variable)
    w_rule = w - w ** q
    return coefficients + f.derivative() * w_rule


def log_derivative(f, q):
    """
    Δ(f) = δ(f)/f as a reduced pair (numerator, denominator) with monic
    denominator.
    """
    if not f:
        raise InputError('the logarithmic derivative of 0 is undefined')
    numerator = delta_w(f, q)
    if not numerator:
        return numerator, Polynomial.monomial(0, coerce=f.coerce, variable=f.variable)
    common = numerator.gcd(f)
    numerator, denominator = numerator // common, f // common
    scale = 1 / denominator.leading
    return numerator * scale, denominator * scale


def _frobenius_check(c, r, q):
    """δ(c^r) = c^r - c^(rq), which makes δ(W - c^r) = (W - c^r) - (W - c^r)^q."""
    power = c ** r
    return delta(power) == power - power ** q


def closed_form_log_derivative(p, q, c):
    """1 - (W - c^r)^(q-1)."""
    r = q // p
    shifted = w_polynomial(p, [-(c ** r), 1])
    return 1 - shifted ** (q - 1)


def class_separator(p, q, c1, c2):
    """
    Δ(W - c1^r) - Δ(W - c2^r) with its W-degree and Z-degree.

    Both logarithmic derivatives are computed from δ and compared with
    the closed form 1 - (W - c^r)^(q-1).
    """
    r = check_parameters(p, q)
    E = tower(p)
    c1, c2 = E.element(c1), E.element(c2)
    if c1 == c2:
        raise InputError('class_separator needs two distinct elements')
    parts = []
    for c in (c1, c2):
        if not _frobenius_check(c, r, q):
            raise InconsistentDataError(f'δ(c^r) differs from c^r - c^(rq) for c = {c!r}')
        numerator, denominator = log_derivative(w_polynomial(p, [-(c ** r), 1]), q)
        if not denominator.is_constant():
            raise InconsistentDataError(f'Δ(W - c^r) is not a polynomial for c = {c!r}')
        value = numerator * (1 / denominator.leading)
        if value != closed_form_log_derivative(p, q, c):
            raise InconsistentDataError(f'Δ(W - c^r) disagrees with its closed form for c = {c!r}')
        parts.append(value)
    difference = parts[0] - parts[1]
    degree = difference.degree
    logger.debug('separator p=%d q=%d: W-degree %d', p, q, degree)
    return Separation(c1, c2, difference, degree, r * max(degree, 0), degree > 0)


def samuel_criterion(b1_delta, b2_delta, unit_log_derivatives_constant=True):
    """
    Compare two logarithmic derivatives, given as polynomials in W.

    M1 ≅ M2 exactly when Δ(b1) - Δ(b2) is a unit's logarithmic derivative.
    When those are all constants, a nonconstant difference rules this out;
    a constant difference decides nothing.
    """
    if not unit_log_derivatives_constant:
        raise InputError('the criterion needs unit logarithmic derivatives to be constant')
    difference = b1_delta - b2_delta
    if difference.is_constant():
        return INCONCLUSIVE
    return NOT_ISOMORPHIC


def class_census(p, q):
    """
    Separate the classes M(a)^r for a in F_p pairwise and count the classes
    left after merging pairs the test does not separate.
    """
    check_parameters(p, q)
    separations = [class_separator(p, q, a, b) for a, b in combinations(range(p), 2)]
    parent = list(range(p))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for (a, b), separation in zip(combinations(range(p), 2), separations):
        verdict = samuel_criterion(separation.difference, w_polynomial(p, []))
        if verdict == INCONCLUSIVE:
            parent[find(b)] = find(a)
    count = len({find(a) for a in range(p)})
    logger.debug('class census p=%d q=%d: %d classes', p, q, count)
    return ClassCensus(p, q, separations, count)


def desk_scale_class_count(p, q):
    return class_census(p, q).class_count


# Identities in F_p(b)[Z]

def w_identity_checks(p, q):
    """
    The identities behind δ(W) = W - W^q, checked exactly.

    Concretely β = b, γ = b^r, α = b^q, x = Z^q and y = (Z^q - Z)/b in
    F_p(b, Z). Formally δ = g·∂/∂g on F_p[x, y, g] with g standing for γ.
    The abstract check uses E[W] with the rule δ(W) = W - W^q.
    """
    r = check_parameters(p, q)
    _, b, Z = field('b,Z', GF(p))
    beta, gamma, alpha = b, b ** r, b ** q
    x = Z ** q
    y = (Z ** q - Z) / b
    W = Z ** r

    _, fx, fy, g = ring('x,y,g', GF(p))
    formal_w = fx ** r - g * fy ** r
    formal_delta = g * formal_w.diff(g)

    abstract_w = w_polynomial(p, [0, 1])
    numerator, denominator = log_derivative(abstract_w, q)

    checks = {
        'gamma_p_is_alpha': gamma ** p == alpha,
        'z_recovered': x - beta * y == Z,
        'w_equals_z_power': x ** r - gamma * y ** r == W,
        'gamma_term': gamma * y ** r == Z ** (r * q) - Z ** r,
        'formal_delta': formal_delta == -g * fy ** r,
        'delta_rule': -gamma * y ** r == W - W ** q,
        'abstract_model': (numerator == 1 - abstract_w ** (q - 1) and denominator == 1),
    }
    logger.debug('w identities p=%d q=%d: %s', p, q, checks)
    return checks


def verify_w_identities(p, q):
    return all(w_identity_checks(p, q).values())
