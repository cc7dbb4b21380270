"""
Cohomology of finite groups in degrees 0, 1 and 2, and the comparison maps
between cohomology groups: restriction, inflation, maps induced by module
homomorphisms, connecting maps and the six-term exact sequence.
"""

import logging
from collections import namedtuple
from math import gcd

from picdescent.exceptions import InconsistentDataError, InputError
from picdescent.gmodules.constructions import (
    abelianization, fixed_points, fixed_submodule, induced_module, restrict_module,
)
from picdescent.gmodules.models import GModule, Subgroup
from picdescent.zlattice.homomorphisms import Subquotient, exact_at
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup
from picdescent.zlattice.normal_forms import LinearSystem, lattice_basis, torsion_factors_mod

from .cochains import (
    CochainComplexSlice, apply_coboundary, check_degree, coboundary_matrix, guard, tuple_index, tuples,
)
from .models import CohomologyGroup, CohomologyMap

logger = logging.getLogger(__name__)

ShapiroResult = namedtuple('ShapiroResult', ['h1_induced', 'h1_over_subgroup', 'isomorphic'])
InflationRestriction = namedtuple(
    'InflationRestriction', ['inflation', 'restriction', 'inflation_injective', 'composite_zero', 'exact'],
)


# Groups

def _acts_on_lattice(module):
    """True when the action matrices form a homomorphism on Z^r itself, not only modulo relations."""
    G = module.group
    action = module.action
    if action[0] != IntMatrix.identity(module.ambient_rank):
        return False
    return all(action[s] @ action[h] == action[G.mul(s, h)] for s in G.generators() for h in G.elements)


def relation_lattice(module):
    """
    The relation lattice R of M as a G-lattice, with its basis in ambient
    coordinates. Needs an action that is a homomorphism on Z^r.
    """
    r = module.ambient_rank
    basis = lattice_basis(module.relation_vectors, r)
    system = LinearSystem(IntMatrix.from_columns(basis, r))
    action = []
    for g, matrix in enumerate(module.action):
        columns = [system.solve(matrix.apply(b)) for b in basis]
        if any(c is None for c in columns):
            raise InconsistentDataError(f'action of element {g} does not preserve the relations')
        action.append(IntMatrix.from_columns(columns, len(basis)))
    lattice = GModule(module.group, FgAbelianGroup.free(len(basis)), action,
                      name=f'R({module.name})', check=False)
    return lattice, basis


def cone_differential(module, degree):
    """
    The differential into degree n of the cone of R -> Z^r, for M = Z^r/R.

    Columns are C^(n-1)(Z^r) then C^n(R); rows are C^n(Z^r) then the
    generator-first rows of C^(n+1)(R). The matrix is (x, y) -> (dx + y,
    -dy), and for n >= 1 the torsion of its cokernel is H^n(G, M).
    """
    G = module.group
    r = module.ambient_rank
    d = coboundary_matrix(module, degree - 1)
    if not module.relation_vectors:
        return d
    lattice, basis = relation_lattice(module)
    s = len(basis)
    offset = d.cols
    rows = []
    for k in range(d.rows):
        row = dict(d.sparse_row(k))
        block, i = divmod(k, r)
        for j, b in enumerate(basis):
            if b[i]:
                row[offset + block * s + j] = b[i]
        rows.append(row)
    d_relations = coboundary_matrix(lattice, degree, first=G.generators() or (0,))
    for k in range(d_relations.rows):
        rows.append({offset + j: -v for j, v in d_relations.sparse_row(k)})
    return IntMatrix(len(rows), offset + G.order ** degree * s, rows)


def cohomology(module, degree):
    """
    H^degree(G, M) as an abstract group.

    For n >= 1 H^n is killed by |G|, so when G acts on the ambient lattice
    it is read off `cone_differential` by elimination modulo 2|G|. Actions
    that are homomorphisms only modulo relations take the subquotient path.
    """
    check_degree(degree)
    if degree == 0:
        return fixed_points(module)
    if module.uniquely_divisible:
        return rational_vanishing(module)
    G = module.group
    r = module.ambient_rank
    guard(G, degree, r)
    if _acts_on_lattice(module):
        matrix = cone_differential(module, degree)
        logger.debug('H^%d over %s: cone path on a %dx%d matrix', degree, G, matrix.rows, matrix.cols)
        return FgAbelianGroup.from_invariants(torsion_factors_mod(matrix, 2 * G.order))
    logger.debug('H^%d over %s: subquotient path on rank %d', degree, G, r)
    return CohomologyGroup(module, degree).group


def h0(module):
    return cohomology(module, 0)


def h1(module):
    return cohomology(module, 1)


def h2(module):
    return cohomology(module, 2)


def cohomology_group(module, degree):
    """H^degree(G, M) with classes, representatives and class lookup."""
    check_degree(degree)
    return CohomologyGroup(module, degree)


def rational_vanishing(module):
    """
    Higher cohomology of a uniquely divisible module is 0: it is killed by
    |G| and multiplication by |G| is invertible on the coefficients.
    """
    if not module.uniquely_divisible:
        raise InputError('module is not flagged uniquely divisible')
    return FgAbelianGroup.trivial()


def hom_from_group(G, M):
    """Hom(G, M) for an abelian group M: Hom(G^ab, M) from invariant factors."""
    out = []
    for a in abelianization(G).invariant_factors:
        for d in M.invariant_factors:
            out.append(gcd(a, d))
    return FgAbelianGroup.from_invariants(sorted(out))


def character_group(G):
    """
    Hom(G, Q/Z), computed as Hom(G, Z/|G|): every homomorphism into Q/Z
    lands in (1/|G|)Z/Z.
    """
    return hom_from_group(G, FgAbelianGroup.cyclic(G.order))


# Crossed homomorphisms

def crossed_homomorphisms(module):
    """A Z-basis of the crossed homomorphisms G -> M, each as a table g -> m."""
    slice_ = CochainComplexSlice(module, 1)
    basis = Subquotient(slice_.coboundary_out, None, slice_.cycle_relations).basis
    r = module.ambient_rank
    return [{g: vector[g * r:(g + 1) * r] for g in module.group.elements} for vector in basis]


def is_crossed_homomorphism(module, f):
    """True when f(gh) = f(g) + g·f(h) modulo relations for all g, h."""
    G = module.group
    u = module.underlying
    for g in G.elements:
        for h in G.elements:
            lhs = f[G.mul(g, h)]
            rhs = [a + b for a, b in zip(f[g], module.act(g, f[h]))]
            if not u.equal(lhs, rhs):
                return False
    return True


# Oracle for cyclic groups

def cyclic_h_oracle(module, degree):
    """
    H^1 = ker(N)/im(σ-1) and H^2 = M^G/N·M for cyclic G = <σ>, with
    N = sum of all group elements. No cochains are involved.
    """
    G = module.group
    sigma = G.cyclic_generator()
    if sigma is None:
        raise InputError(f'{G} is not cyclic')
    if degree not in (1, 2):
        raise InputError('the cyclic oracle covers degrees 1 and 2')
    r = module.ambient_rank
    norm = IntMatrix.zeros(r, r)
    for a in module.action:
        norm = norm + a
    difference = module.action[sigma] - IntMatrix.identity(r)
    relations = module.relation_vectors
    if degree == 1:
        return Subquotient(norm, difference, relations, relations).group
    return Subquotient(difference, norm, relations, relations).group


# Maps

def _as_subgroup(G, H):
    if isinstance(H, Subgroup):
        return H
    return Subgroup(G, H)


def restriction(module, H, degree, source=None):
    """res: H^degree(G, M) -> H^degree(H, M)."""
    G = module.group
    H = _as_subgroup(G, H)
    source = source or cohomology_group(module, degree)
    target = cohomology_group(restrict_module(module, H), degree)
    r = module.ambient_rank

    def restrict(cocycle):
        out = []
        for t in tuples(H.group, degree):
            offset = tuple_index(G, tuple(H.elements[x] for x in t)) * r
            out.extend(cocycle[offset:offset + r])
        return tuple(out)

    return CohomologyMap.from_cochain_map(source, target, restrict, name='restriction')


def inflation(module, N, degree=1, target=None):
    """inf: H^degree(G/N, M^N) -> H^degree(G, M)."""
    G = module.group
    N = _as_subgroup(G, N)
    fixed, inclusion, projection = fixed_submodule(module, N)
    Q = fixed.group
    source = cohomology_group(fixed, degree)
    target = target or cohomology_group(module, degree)
    s = fixed.ambient_rank

    def inflate(cocycle):
        out = []
        for t in tuples(G, degree):
            offset = tuple_index(Q, tuple(projection[g] for g in t)) * s
            out.extend(inclusion.apply(cocycle[offset:offset + s]))
        return tuple(out)

    return CohomologyMap.from_cochain_map(source, target, inflate, name='inflation')


def inflation_restriction(module, N):
    """
    0 -> H^1(G/N, M^N) -> H^1(G, M) -> H^1(N, M), with its exactness checked.
    """
    middle = cohomology_group(module, 1)
    inf = inflation(module, N, 1, target=middle)
    res = restriction(module, N, 1, source=middle)
    return InflationRestriction(
        inflation=inf,
        restriction=res,
        inflation_injective=inf.is_injective(),
        composite_zero=res.homomorphism.compose(inf.homomorphism).is_zero(),
        exact=exact_at(inf.homomorphism, res.homomorphism),
    )


def _blocks(vector, size, count):
    return [tuple(vector[i * size:(i + 1) * size]) for i in range(count)]


def induced_map(equivariant, source, target):
    """H^n(F): H^n(G, A) -> H^n(G, B) for an equivariant F: A -> B."""
    F = equivariant.matrix
    count = source.module.group.order ** source.degree

    def push(cocycle):
        out = []
        for block in _blocks(cocycle, F.cols, count):
            out.extend(F.apply(block))
        return tuple(out)

    return CohomologyMap.from_cochain_map(source, target, push, name='induced map')


class _BlockSolver:
    """Solves F·x ≡ v modulo the relation lattice of F's target, block by block."""

    def __init__(self, F, relations, failure):
        self.cols = F.cols
        self.rows = F.rows
        self.failure = failure
        relations = list(relations)
        if relations:
            F = IntMatrix.hstack([F, IntMatrix.from_columns(relations, F.rows)], F.rows)
        self.system = LinearSystem(F)

    def __call__(self, vector, count):
        out = []
        for block in _blocks(vector, self.rows, count):
            x = self.system.solve(block)
            if x is None:
                raise InconsistentDataError(self.failure)
            out.extend(x[:self.cols])
        return tuple(out)


def connecting_map(ses, degree, source=None, target=None):
    """
    δ: H^degree(G, C) -> H^(degree+1)(G, A) for 0 -> A -> B -> C -> 0.

    A cocycle of C is lifted blockwise to a cochain of B, its coboundary is
    pulled back along A -> B and the class is read in H^(degree+1)(G, A).
    Each generator is also pushed through a second lift and a second
    representative; disagreeing classes raise InconsistentDataError.
    """
    A, B, C = ses.A, ses.B, ses.C
    G = ses.group
    source = source or cohomology_group(C, degree)
    target = target or cohomology_group(A, degree + 1)
    lift = _BlockSolver(ses.project.matrix, C.relation_vectors, 'sequence is not surjective onto C')
    pull = _BlockSolver(ses.inject.matrix, B.relation_vectors,
                        'connecting map: coboundary does not come from A')
    blocks = G.order ** degree

    def pull_back_coboundary(y):
        return pull(apply_coboundary(B, degree, y), G.order ** (degree + 1))

    def delta(cocycle):
        return pull_back_coboundary(lift(cocycle, blocks))

    def second_delta(cocycle):
        z = list(cocycle)
        if degree > 0 and C.ambient_rank:
            unit = [0] * (G.order ** (degree - 1) * C.ambient_rank)
            unit[0] = 1
            z = [a + b for a, b in zip(z, apply_coboundary(C, degree - 1, unit))]
        y = list(lift(z, blocks))
        if A.ambient_rank:
            shift = ses.inject.matrix.column(0)
            y[:B.ambient_rank] = [a + b for a, b in zip(y[:B.ambient_rank], shift)]
        return pull_back_coboundary(y)

    images = []
    for generator in source.generators():
        first = target.class_of(delta(generator.cocycle))
        second = target.class_of(second_delta(generator.cocycle))
        if first != second:
            raise InconsistentDataError('connecting map depends on the chosen lift')
        images.append(first)
    return CohomologyMap(source, target, images, name=f'connecting map δ{degree}')


class SixTermSequence:
    """
    0 -> H0(A) -> H0(B) -> H0(C) -> H1(A) -> H1(B) -> H1(C) -> H2(A)

    with every map computed and exactness recorded at each interior node.
    """
    labels = ('H0(A)', 'H0(B)', 'H0(C)', 'H1(A)', 'H1(B)', 'H1(C)', 'H2(A)')

    def __init__(self, ses):
        self.ses = ses
        h0a = cohomology_group(ses.A, 0)
        h0b = cohomology_group(ses.B, 0)
        h0c = cohomology_group(ses.C, 0)
        h1a = cohomology_group(ses.A, 1)
        h1b = cohomology_group(ses.B, 1)
        h1c = cohomology_group(ses.C, 1)
        h2a = cohomology_group(ses.A, 2)
        self.groups = (h0a, h0b, h0c, h1a, h1b, h1c, h2a)
        self.maps = (
            induced_map(ses.inject, h0a, h0b),
            induced_map(ses.project, h0b, h0c),
            connecting_map(ses, 0, h0c, h1a),
            induced_map(ses.inject, h1a, h1b),
            induced_map(ses.project, h1b, h1c),
            connecting_map(ses, 1, h1c, h2a),
        )
        exactness = {'H0(A)': self.maps[0].is_injective()}
        for label, incoming, outgoing in zip(self.labels[1:6], self.maps, self.maps[1:]):
            exactness[label] = exact_at(incoming.homomorphism, outgoing.homomorphism)
        self.exactness = exactness
        logger.debug('six-term sequence %s: %s', ses, exactness)

    @property
    def connecting_maps(self):
        return self.maps[2], self.maps[5]

    def is_exact(self):
        return all(self.exactness.values())

    def failures(self):
        return [label for label, ok in self.exactness.items() if not ok]


def six_term_sequence(ses):
    return SixTermSequence(ses)


def shapiro_check(G, H, module):
    """H^1(G, Ind_H^G M) against H^1(H, M)."""
    H = _as_subgroup(G, H)
    induced = h1(induced_module(G, H, module))
    local = h1(module)
    return ShapiroResult(induced, local, induced == local)
