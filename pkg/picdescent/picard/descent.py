"""
Descent kernels Ker[Pic(A) -> Pic(B)] for Galois covers, computed as H^1
of a unit model.
"""

import logging
from collections import namedtuple
from itertools import product

from picdescent.cohomology.operations import h1, h2, hom_from_group, six_term_sequence
from picdescent.exceptions import InputError
from picdescent.gmodules.builtins import cyclic_group
from picdescent.gmodules.constructions import abelianization, coaugmentation_quotient, negation_lattice, trivial_module
from picdescent.zlattice.homomorphisms import GroupHomomorphism
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

from .conductor import Cusp, FiniteField, conductor_square_pic
from .models import UnitModel

logger = logging.getLogger(__name__)

GroupRingPic = namedtuple(
    'GroupRingPic',
    ['pic', 'abelianization', 'matches_abelianization', 'second_cohomology', 'connecting_isomorphism'],
)


def descent_kernel(model):
    """H^1(G, lattice_part ⊕ finite_part); the field parts contribute 0."""
    kernel = h1(model.module)
    logger.debug('descent kernel of %r: %s', model, kernel)
    return kernel


def circle_model():
    """
    R[X, Y]/(X² + Y² - 1) ⊂ C[t, t⁻¹] with C2 acting by conjugation.

    Units are C* × t^Z and conjugation sends t to t⁻¹.
    """
    lattice = negation_lattice()
    return UnitModel(lattice.group, hilbert90_trivial_parts=1, lattice_part=lattice, name='circle')


def group_ring_model(G):
    """
    Units K* ⊕ L of the Galois algebra B over A = (B)^G built from
    0 -> Z -> ZG -> L -> 0.
    """
    L, _ = coaugmentation_quotient(G)
    return UnitModel(G, hilbert90_trivial_parts=1, lattice_part=L, name=f'group ring of {G}')


def group_ring_pic(G):
    """
    Pic(A) = H^1(G, L), compared with G/[G, G] and with H^2(G, Z).

    The connecting map H^1(G, L) -> H^2(G, Z) is read from the six-term
    sequence of 0 -> Z -> ZG -> L -> 0 and must be an isomorphism.
    """
    pic = descent_kernel(group_ring_model(G))
    ab = abelianization(G)
    second = h2(trivial_module(G, FgAbelianGroup.free(1)))
    _, ses = coaugmentation_quotient(G)
    connecting = six_term_sequence(ses).connecting_maps[1].is_isomorphism()
    result = GroupRingPic(pic, ab, pic == ab, pic == second, connecting)
    logger.debug('group ring Pic over %s: %s', G, result)
    return result


def kernel_torsion_bound_check(model, d):
    """True when d kills the descent kernel."""
    return descent_kernel(model).is_annihilated_by(d)


# Nonreduced finite étale covers

def _check_finite_field(field):
    if not isinstance(field, FiniteField):
        raise InputError(f'a finite field of positive characteristic is needed, got {field!r}')


def truncated_units(field):
    """
    R* for R = k[ε]/(ε^p) with k = F_q of characteristic p.

    R* = k* × (1 + εR); the second factor has order q^(p-1) and exponent p
    because (1 + x)^p = 1 + x^p = 1 for x in εR.
    """
    _check_finite_field(field)
    p, e, q = field.characteristic, field.degree, field.order
    return FgAbelianGroup.cyclic(q - 1).direct_sum(FgAbelianGroup.from_invariants([p] * (e * (p - 1))))


def finite_etale_model(field):
    """
    Y = F ×_k R over X = E ×_k R for a degree-p Galois étale cover F -> E
    of connected varieties, R = k[ε]/(ε^p). Γ(Y) = R and G = Z/p acts on
    it trivially, so the kernel is Hom(Z/p, R*).
    """
    _check_finite_field(field)
    p = field.characteristic
    G = cyclic_group(p)
    units = trivial_module(G, truncated_units(field), name=f'({field.name}[ε]/(ε^{p}))*')
    return UnitModel(G, finite_part=units, name=f'finite étale cover over {field.name}[ε]/(ε^{p})')


def finite_etale_kernel(field):
    """The descent kernel of `finite_etale_model` with Hom(Z/p, R*) beside it."""
    model = finite_etale_model(field)
    return descent_kernel(model), hom_from_group(model.group, truncated_units(field))


def _truncated_product(a, b, p):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                out[i + j] = (out[i + j] + x * b[j]) % p
    return tuple(out)


def truncated_torsion_census(p):
    """Units u of F_p[ε]/(ε^p) with u^p = 1, counted by enumeration."""
    one = (1,) + (0,) * (p - 1)
    count = 0
    for u in product(range(p), repeat=p):
        if not u[0]:
            continue
        power = one
        for _ in range(p):
            power = _truncated_product(power, u, p)
        if power == one:
            count += 1
    return count


# Covers whose pieces have trivial Pic

def cusp_open_cover_kernel(field):
    """
    X = Spec k[t², t³] covered by X_reg = Spec k[t, t⁻¹] and the local ring
    at the cusp. Both pieces have trivial Pic, so the kernel is all of
    Pic(X) = k.
    """
    return conductor_square_pic(Cusp(field))


def ramification_kernel(ramification_index):
    """
    H^1(G, B*) for B the integral closure of a complete DVR A in a Galois
    extension L/K with ramification index e.

    From 0 -> B* -> L* -> Z -> 0 (the valuation of L), Hilbert 90 for L*
    and v_L(K*) = eZ, H^1(G, B*) is the cokernel of K* -> Z, that is Z/e.
    """
    e = int(ramification_index)
    if e < 1:
        raise InputError(f'ramification index must be positive, got {ramification_index}')
    Z = FgAbelianGroup.free(1)
    valuation = GroupHomomorphism(Z, Z, IntMatrix.from_rows([[e]]))
    return valuation.cokernel()
