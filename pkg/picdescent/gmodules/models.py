"""
Finite groups given by multiplication tables and the modules they act on.

Elements of a group of order n are the indices 0..n-1; element 0 is the
identity. A G-module is a presented abelian group together with one integer
matrix per group element, acting on column vectors of ambient coordinates.
"""

import logging
from collections import deque

from picdescent.exceptions import InconsistentActionError, InconsistentDataError, InputError
from picdescent.zlattice.homomorphisms import GroupHomomorphism, exact_at
from picdescent.zlattice.matrices import IntMatrix

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    A finite group given by its multiplication table.

    `table[a][b]` is the index of a·b. The table is verified at construction
    (identity, inverses and associativity) unless `check=False`.
    """

    def __init__(self, table, name=None, check=True):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0:
            raise InconsistentDataError('a group needs at least one element')
        if any(len(row) != n for row in table):
            raise InconsistentDataError('multiplication table must be square')
        self.table = table
        self.order = n
        self.name = name or f'G{n}'
        if check:
            self._validate()
        self.inverses = tuple(row.index(0) for row in table)
        self._generators = None

    def _validate(self):
        n = self.order
        t = self.table
        elements = set(range(n))
        for a in range(n):
            if set(t[a]) != elements:
                raise InconsistentDataError(f'row {a} of the table is not a permutation of the elements')
            if set(t[b][a] for b in range(n)) != elements:
                raise InconsistentDataError(f'column {a} of the table is not a permutation of the elements')
            if t[0][a] != a or t[a][0] != a:
                raise InconsistentDataError('element 0 must be the identity')
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tab = t[ab]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise InconsistentDataError(f'table is not associative at ({a}, {b}, {c})')

    # Arithmetic

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self.inverses[a]

    def power(self, a, k):
        result = 0
        if k < 0:
            a, k = self.inverses[a], -k
        for _ in range(k):
            result = self.table[result][a]
        return result

    def conjugate(self, g, h):
        """g·h·g^-1"""
        return self.table[self.table[g][h]][self.inverses[g]]

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    # Structure

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def cyclic_generator(self):
        """The smallest element generating the whole group, or None."""
        for a in range(self.order):
            if self.element_order(a) == self.order:
                return a
        return None

    def is_cyclic(self):
        return self.cyclic_generator() is not None

    def closure(self, elements):
        """The subgroup generated by `elements`, as a sorted tuple."""
        gens = sorted(set(int(e) for e in elements) - {0})
        for g in gens:
            if not 0 <= g < self.order:
                raise InputError(f'element {g} outside 0..{self.order - 1}')
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def generators(self):
        """A generating set chosen greedily in index order."""
        if self._generators is None:
            gens = []
            span = {0}
            for a in range(self.order):
                if a not in span:
                    gens.append(a)
                    span = set(self.closure(gens))
            self._generators = tuple(gens)
        return self._generators

    def subgroup(self, elements):
        return Subgroup(self, elements)

    def is_normal(self, elements):
        members = set(elements)
        return all(self.conjugate(g, h) in members for g in self.generators() for h in members)

    def left_cosets(self, elements):
        """
        Left cosets gH ordered by their smallest element.

        Returns (representatives, coset_of) where representatives[i] is the
        smallest element of the i-th coset and coset_of[g] is the index of
        the coset containing g.
        """
        members = tuple(elements)
        coset_of = [None] * self.order
        representatives = []
        for g in range(self.order):
            if coset_of[g] is None:
                index = len(representatives)
                representatives.append(g)
                for h in members:
                    coset_of[self.table[g][h]] = index
        return representatives, coset_of

    def quotient(self, elements):
        """
        G/N for a normal subgroup N, with the projection G -> G/N as a list.
        """
        members = tuple(sorted(set(elements)))
        if not self.is_normal(members):
            raise InconsistentDataError('subgroup is not normal')
        reps, coset_of = self.left_cosets(members)
        table = [[coset_of[self.table[a][b]] for b in reps] for a in reps]
        return FiniteGroup(table, name=f'{self.name}/N', check=False), coset_of

    def commutator_subgroup(self):
        commutators = set()
        for a in range(self.order):
            for b in range(self.order):
                ab = self.table[a][b]
                commutators.add(self.table[ab][self.inverses[self.table[b][a]]])
        return self.closure(commutators)

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __str__(self):
        return self.name

    def __repr__(self):
        return f'FiniteGroup({self.name}, order={self.order})'


class Subgroup:
    """
    A verified subgroup of `parent`, re-indexed as a group of its own.

    `elements[i]` is the parent index of local element i; local element 0 is
    the identity.
    """

    def __init__(self, parent, elements):
        members = tuple(sorted(set(int(e) for e in elements)))
        if not members or members[0] != 0:
            raise InconsistentDataError('subgroup must contain the identity')
        if members[-1] >= parent.order:
            raise InputError(f'element {members[-1]} outside 0..{parent.order - 1}')
        index = {g: i for i, g in enumerate(members)}
        table = []
        for a in members:
            row = []
            for b in members:
                ab = parent.mul(a, b)
                if ab not in index:
                    raise InconsistentDataError(f'subgroup not closed: {a}·{b} = {ab} is missing')
                row.append(index[ab])
            table.append(row)
        self.parent = parent
        self.elements = members
        self.to_local = index
        self.group = FiniteGroup(table, name=f'{parent.name}>{len(members)}', check=False)

    @property
    def order(self):
        return len(self.elements)

    def index(self):
        return self.parent.order // self.order

    def is_normal(self):
        return self.parent.is_normal(self.elements)

    def __contains__(self, g):
        return g in self.to_local

    def __repr__(self):
        return f'Subgroup({self.elements} of {self.parent.name})'


def _congruent(group, difference):
    """True when every column of `difference` lies in the relation lattice of `group`."""
    if difference.is_zero():
        return True
    if not group.relation_vectors:
        return False
    return all(group.contains(column) for column in difference.columns())


class GModule:
    """
    A finite group acting on a presented abelian group by integer matrices.

    `action[g]` acts on ambient coordinates. The matrices are checked to
    preserve the relation lattice and to define a homomorphism modulo
    relations. `uniquely_divisible` marks modules standing in for Q-vector
    spaces, whose higher cohomology vanishes without computation.
    """

    def __init__(self, group, underlying, action, uniquely_divisible=False, name=None, check=True):
        action = tuple(action)
        if len(action) != group.order:
            raise InputError(f'expected {group.order} action matrices, got {len(action)}')
        r = underlying.ambient_rank
        for g, matrix in enumerate(action):
            if matrix.shape != (r, r):
                raise InputError(f'action matrix of element {g} must be {r}x{r}, got {matrix.rows}x{matrix.cols}')
        self.group = group
        self.underlying = underlying
        self.action = action
        self.uniquely_divisible = bool(uniquely_divisible)
        self.name = name or 'M'
        if check:
            self._validate()

    def _validate(self):
        u = self.underlying
        if not _congruent(u, self.action[0] - IntMatrix.identity(u.ambient_rank)):
            raise InconsistentActionError('the identity element does not act as the identity')
        for g, matrix in enumerate(self.action):
            for relation in u.relation_vectors:
                if not u.contains(matrix.apply(relation)):
                    raise InconsistentDataError(f'action of element {g} does not preserve the relations')
        # Checking s·h for generators s and every h is enough: it forces
        # action(g)·action(h) = action(gh) for all g by induction on word length.
        G = self.group
        for s in G.generators():
            for h in G.elements:
                if not _congruent(u, self.action[s] @ self.action[h] - self.action[G.mul(s, h)]):
                    raise InconsistentActionError(pair=(s, h))
        logger.debug('GModule %s: verified action of %s on rank %d', self.name, G, u.ambient_rank)

    @property
    def ambient_rank(self):
        return self.underlying.ambient_rank

    @property
    def relation_vectors(self):
        return self.underlying.relation_vectors

    @property
    def order(self):
        return self.group.order

    def act(self, g, vector):
        return self.action[g].apply(vector)

    def is_trivial_action(self):
        identity = IntMatrix.identity(self.ambient_rank)
        return all(_congruent(self.underlying, a - identity) for a in self.action)

    def __repr__(self):
        return f'GModule({self.name} over {self.group}: {self.underlying})'


class EquivariantMap:
    """
    A G-equivariant homomorphism source -> target on ambient coordinates.
    """

    def __init__(self, source, target, matrix, check=True):
        if source.group != target.group:
            raise InputError('equivariant maps need modules over the same group')
        self.source = source
        self.target = target
        self.matrix = matrix
        self.homomorphism = GroupHomomorphism(source.underlying, target.underlying, matrix, check=check)
        if check:
            for s in source.group.generators():
                if not _congruent(target.underlying,
                                  matrix @ source.action[s] - target.action[s] @ matrix):
                    raise InconsistentDataError(f'map does not commute with the action of element {s}')

    def __call__(self, vector):
        return self.matrix.apply(vector)

    @property
    def group(self):
        return self.source.group


class ShortExactSequence:
    """
    0 -> A -inject-> B -project-> C -> 0, verified exact.
    """

    def __init__(self, inject, project, check=True):
        if inject.target is not project.source and (
                inject.target.ambient_rank != project.source.ambient_rank
                or inject.target.group != project.source.group):
            raise InputError('maps do not meet at a common module')
        self.inject = inject
        self.project = project
        self.A = inject.source
        self.B = inject.target
        self.C = project.target
        if check:
            if not inject.homomorphism.is_injective():
                raise InconsistentDataError('sequence is not exact at A: inject has a kernel')
            if not project.homomorphism.is_surjective():
                raise InconsistentDataError('sequence is not exact at C: project is not onto')
            if not exact_at(inject.homomorphism, project.homomorphism):
                raise InconsistentDataError('sequence is not exact at B')

    @property
    def group(self):
        return self.B.group

    def __repr__(self):
        return f'ShortExactSequence(0 -> {self.A.name} -> {self.B.name} -> {self.C.name} -> 0)'
