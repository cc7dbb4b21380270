"""
Standard G-modules and the operations between them.
"""

import logging

from picdescent.exceptions import InconsistentDataError, InputError
from picdescent.zlattice.homomorphisms import Subquotient
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup
from picdescent.zlattice.normal_forms import LinearSystem, determinant

from .builtins import cyclic_group
from .models import EquivariantMap, GModule, ShortExactSequence, Subgroup

logger = logging.getLogger(__name__)


def _permutation_matrix(images):
    """Matrix sending basis vector e_i to e_{images[i]}."""
    n = len(images)
    data = [dict() for _ in range(n)]
    for i, j in enumerate(images):
        data[j][i] = 1
    return IntMatrix(n, n, data)


def _as_subgroup(G, H):
    if isinstance(H, Subgroup):
        if H.parent != G:
            raise InputError('subgroup belongs to a different group')
        return H
    return Subgroup(G, H)


def trivial_module(G, M, name=None):
    """M with every element of G acting as the identity."""
    identity = IntMatrix.identity(M.ambient_rank)
    return GModule(G, M, [identity] * G.order, name=name or str(M), check=False)


def regular_module(G):
    """ZG with G acting by left multiplication on the basis."""
    action = [_permutation_matrix(G.table[g]) for g in G.elements]
    return GModule(G, FgAbelianGroup.free(G.order), action, name=f'Z[{G}]', check=False)


def permutation_module(G, H):
    """Z[G/H]: G permuting the left cosets of H."""
    H = _as_subgroup(G, H)
    reps, coset_of = G.left_cosets(H.elements)
    action = [_permutation_matrix([coset_of[G.mul(g, t)] for t in reps]) for g in G.elements]
    return GModule(G, FgAbelianGroup.free(len(reps)), action, name=f'Z[{G}/H]', check=False)


def _norm_quotient(permutation):
    """
    Z^k / <sum of basis vectors> for a permutation module on k letters.

    The quotient is free on the images of e_0 .. e_{k-2}; e_{k-1} maps to
    minus their sum. Returns (quotient module, projection matrix).
    """
    G = permutation.group
    k = permutation.ambient_rank
    projection_rows = [dict() for _ in range(k - 1)]
    for i in range(k - 1):
        projection_rows[i][i] = 1
        projection_rows[i][k - 1] = -1
    projection = IntMatrix(k - 1, k, projection_rows)
    # section: L -> Z^k, e_i -> e_i
    section = IntMatrix(k, k - 1, [((i, 1),) if i < k - 1 else () for i in range(k)])
    action = [projection @ a @ section for a in permutation.action]
    quotient = GModule(G, FgAbelianGroup.free(k - 1), action, name=f'{permutation.name}/N', check=False)
    return quotient, projection


def _norm_sequence(permutation):
    G = permutation.group
    k = permutation.ambient_rank
    quotient, projection = _norm_quotient(permutation)
    z = trivial_module(G, FgAbelianGroup.free(1), name='Z')
    inject = EquivariantMap(z, permutation, IntMatrix.from_columns([(1,) * k], k), check=False)
    project = EquivariantMap(permutation, quotient, projection, check=False)
    return quotient, ShortExactSequence(inject, project, check=False)


def coaugmentation_quotient(G):
    """
    L = ZG/<norm element>, free of rank |G| - 1, with the exact sequence
    0 -> Z -> ZG -> L -> 0 (1 maps to the sum of all group elements).
    """
    L, ses = _norm_sequence(regular_module(G))
    L.name = f'L[{G}]'
    return L, ses


def coset_coaugmentation(G, H):
    """Z[G/H] modulo the sum of the cosets, with its defining sequence."""
    return _norm_sequence(permutation_module(G, H))


def negation_lattice(n=2):
    """Z with the generator of C2 acting as -1."""
    if n != 2:
        raise InputError('negation lattices are only defined over C2')
    G = cyclic_group(2)
    action = [IntMatrix.identity(1), IntMatrix.from_rows([[-1]])]
    return GModule(G, FgAbelianGroup.free(1), action, name='Z(-1)', check=False)


def induced_module(G, H, M):
    """
    Ind_H^G M on [G:H] copies of M.

    Coset representatives t_i are the smallest elements of the left cosets.
    If g·t_i = t_j·h with h in H, block (j, i) of action(g) is action_M(h).
    """
    H = _as_subgroup(G, H)
    if M.group != H.group:
        raise InputError('module must be defined over the subgroup')
    reps, coset_of = G.left_cosets(H.elements)
    r = M.ambient_rank
    k = len(reps)
    action = []
    for g in G.elements:
        data = [dict() for _ in range(k * r)]
        for i, t in enumerate(reps):
            gt = G.mul(g, t)
            j = coset_of[gt]
            h = H.to_local[G.mul(G.inverse(reps[j]), gt)]
            for row, entries in enumerate(M.action[h].sparse_rows()):
                target = data[j * r + row]
                for col, v in entries:
                    target[i * r + col] = v
        action.append(IntMatrix(k * r, k * r, data))
    relations = IntMatrix.block_diagonal([M.underlying.relations] * k)
    underlying = FgAbelianGroup(k * r, relations)
    logger.debug('induced_module: index %d, rank %d -> %d', k, r, k * r)
    return GModule(G, underlying, action, name=f'Ind({M.name})', check=False)


def restrict_module(M, H):
    """M viewed as a module over the subgroup H."""
    H = _as_subgroup(M.group, H)
    action = [M.action[g] for g in H.elements]
    return GModule(H.group, M.underlying, action, uniquely_divisible=M.uniquely_divisible,
                   name=f'Res({M.name})', check=False)


def direct_sum(modules):
    modules = list(modules)
    if not modules:
        raise InputError('direct sum of no modules has no group')
    G = modules[0].group
    if any(m.group != G for m in modules[1:]):
        raise InputError('direct sum needs modules over the same group')
    underlying = FgAbelianGroup(
        sum(m.ambient_rank for m in modules),
        IntMatrix.block_diagonal([m.underlying.relations for m in modules]),
    )
    action = [IntMatrix.block_diagonal([m.action[g] for m in modules]) for g in G.elements]
    return GModule(G, underlying, action,
                   uniquely_divisible=all(m.uniquely_divisible for m in modules),
                   name=' ⊕ '.join(m.name for m in modules), check=False)


def invariants_subquotient(M, elements=None):
    """
    The subgroup of M fixed by `elements` (by default the whole group).

    Only generators of the subgroup they span are used; the result is a
    Subquotient whose basis spans the fixed lattice in ambient coordinates.
    """
    G = M.group
    if elements is None:
        gens = G.generators()
    else:
        closed = G.closure(elements)
        gens = Subgroup(G, closed).group.generators()
        gens = [closed[s] for s in gens]
    r = M.ambient_rank
    identity = IntMatrix.identity(r)
    if not gens:
        f = IntMatrix.zeros(0, r)
        target_relations = []
    else:
        f = IntMatrix.vstack([M.action[g] - identity for g in gens], r)
        target_relations = []
        for block in range(len(gens)):
            for relation in M.relation_vectors:
                target_relations.append((0,) * (block * r) + tuple(relation)
                                        + (0,) * ((len(gens) - block - 1) * r))
    return Subquotient(f, None, target_relations, M.relation_vectors)


def fixed_points(M):
    """M^G as an abstract group."""
    return invariants_subquotient(M).group


def fixed_submodule(M, N):
    """
    M^N as a module over G/N, with its inclusion into M.

    Returns (module over G/N, inclusion matrix, projection G -> G/N). The
    inclusion maps coordinates on the fixed-lattice basis to ambient
    coordinates of M.
    """
    G = M.group
    N = _as_subgroup(G, N)
    Q, projection = G.quotient(N.elements)
    fixed = invariants_subquotient(M, N.elements)
    basis = fixed.basis
    reps, _ = G.left_cosets(N.elements)
    action = []
    for g in reps:
        columns = []
        for b in basis:
            c = fixed.basis_coordinates(M.act(g, b))
            if c is None:
                raise InconsistentDataError('fixed points are not stable under the group')
            columns.append(c)
        action.append(IntMatrix.from_columns(columns, len(basis)))
    module = GModule(Q, fixed.group, action, name=f'{M.name}^N')
    inclusion = IntMatrix.from_columns(basis, M.ambient_rank)
    return module, inclusion, projection


def abelianization(G):
    """
    G/[G,G] presented on one generator per coset with e_a + e_b = e_ab.
    """
    K = G.commutator_subgroup()
    Q, _ = G.quotient(K)
    n = Q.order
    relations = []
    for a in range(n):
        for b in range(a, n):
            row = [0] * n
            row[a] += 1
            row[b] += 1
            row[Q.mul(a, b)] -= 1
            relations.append(row)
    return FgAbelianGroup(n, relations)


def _inverse(P):
    n = P.rows
    system = LinearSystem(P)
    columns = [system.solve(tuple(1 if i == j else 0 for i in range(n))) for j in range(n)]
    return IntMatrix.from_columns(columns, n)


def twist(M, P):
    """
    The same module written in new coordinates y with x = P·y.

    P must be unimodular.
    """
    if not P.is_square() or P.rows != M.ambient_rank or determinant(P) not in (1, -1):
        raise InputError('twist needs a unimodular matrix of the module rank')
    P_inv = _inverse(P)
    relations = [P_inv.apply(r) for r in M.relation_vectors]
    underlying = FgAbelianGroup(M.ambient_rank, relations or None)
    action = [P_inv @ a @ P for a in M.action]
    return GModule(M.group, underlying, action, uniquely_divisible=M.uniquely_divisible,
                   name=M.name, check=False)


def reduce_mod(M, n):
    """M/nM."""
    if n < 1:
        raise InputError('reduction needs a positive modulus')
    r = M.ambient_rank
    relations = list(M.relation_vectors) + [
        tuple(n if i == j else 0 for i in range(r)) for j in range(r)
    ]
    underlying = FgAbelianGroup(r, relations or None)
    return GModule(M.group, underlying, M.action, name=f'{M.name}/{n}', check=False)


def multiplication_sequence(M, n):
    """0 -> M -n-> M -> M/nM -> 0 for a module with torsion-free ambient lattice."""
    if M.relation_vectors:
        raise InputError('multiplication by n is injective only on relation-free modules')
    r = M.ambient_rank
    quotient = reduce_mod(M, n)
    inject = EquivariantMap(M, M, IntMatrix.identity(r).scale(n), check=False)
    project = EquivariantMap(M, quotient, IntMatrix.identity(r), check=False)
    return ShortExactSequence(inject, project, check=False)


def split_sequence(A, C):
    """0 -> A -> A ⊕ C -> C -> 0."""
    B = direct_sum([A, C])
    a, c = A.ambient_rank, C.ambient_rank
    inject = IntMatrix(a + c, a, [((i, 1),) if i < a else () for i in range(a + c)])
    project = IntMatrix(c, a + c, [((a + i, 1),) for i in range(c)])
    return ShortExactSequence(EquivariantMap(A, B, inject, check=False),
                              EquivariantMap(B, C, project, check=False), check=False)
