"""
Finitely generated abelian groups given by generators and relations.

A group is Z^n modulo the lattice spanned by its relation rows. Its Smith
form is computed once, at construction, and fixes a canonical coordinate
system Z/d1 ⊕ ... ⊕ Z/dk ⊕ Z^f in which elements are compared.
"""

from functools import reduce
from math import gcd

from picdescent.exceptions import InputError

from .matrices import IntMatrix
from .normal_forms import lattice_basis, smith_with_inverse


def _lcm(a, b):
    return a * b // gcd(a, b)


def _as_relation_matrix(relations, ambient_rank):
    if relations is None:
        return IntMatrix.zeros(0, ambient_rank)
    if isinstance(relations, IntMatrix):
        matrix = relations
    else:
        relations = [tuple(r) for r in relations]
        matrix = IntMatrix.from_rows(relations, ambient_rank)
    if matrix.cols != ambient_rank:
        raise InputError(
            f'relations have {matrix.cols} columns but the group has {ambient_rank} generators'
        )
    return matrix


class FgAbelianGroup:
    """
    Z^ambient_rank modulo the row lattice of `relations`.

    Two groups compare equal when their invariant factors and free ranks
    agree, whatever their presentations.
    """

    def __init__(self, ambient_rank, relations=None):
        ambient_rank = int(ambient_rank)
        if ambient_rank < 0:
            raise InputError('ambient rank must be non-negative')
        self.ambient_rank = ambient_rank
        self.relations = _as_relation_matrix(relations, ambient_rank)

        basis = lattice_basis(
            (self.relations.row(i) for i in range(self.relations.rows)), ambient_rank
        )
        reduced = IntMatrix.from_rows(basis, ambient_rank)
        if basis:
            _, diagonal, V, V_inv = smith_with_inverse(reduced)
        else:
            diagonal, V, V_inv = [], IntMatrix.identity(ambient_rank), IntMatrix.identity(ambient_rank)
        rank = sum(1 for d in diagonal if d)
        self._diagonal = tuple(abs(d) for d in diagonal[:rank])
        self._to_canonical = V.transpose()
        self._from_canonical = V_inv.transpose()
        self._relation_basis = tuple(basis)
        self.invariant_factors = tuple(d for d in self._diagonal if d > 1)
        self.free_rank = ambient_rank - rank

    # Alternate constructors

    @classmethod
    def from_invariants(cls, invariant_factors=(), free_rank=0):
        factors = [int(d) for d in invariant_factors if abs(int(d)) != 1]
        rank = len(factors) + free_rank
        return cls(rank, IntMatrix.diagonal(factors, len(factors), rank))

    @classmethod
    def trivial(cls):
        return cls(0)

    @classmethod
    def cyclic(cls, n):
        """Z/n for n >= 1; Z for n == 0."""
        return cls(1, [(n,)])

    @classmethod
    def free(cls, rank):
        return cls(rank)

    # Structure

    @property
    def relation_vectors(self):
        """A basis of the relation lattice."""
        return self._relation_basis

    @property
    def canonical_rank(self):
        return len(self.invariant_factors) + self.free_rank

    def is_trivial(self):
        return not self.invariant_factors and self.free_rank == 0

    def is_finite(self):
        return self.free_rank == 0

    def is_torsion_free(self):
        return not self.invariant_factors

    def order(self):
        """Number of elements, or None for an infinite group."""
        if self.free_rank:
            return None
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def exponent(self):
        """Least e > 0 with e·G = 0, or None for an infinite group."""
        if self.free_rank:
            return None
        return reduce(_lcm, self.invariant_factors, 1)

    def is_annihilated_by(self, n):
        return self.free_rank == 0 and all(n % d == 0 for d in self.invariant_factors)

    def canonical(self):
        """The same group presented as ⊕ Z/d_i ⊕ Z^f on canonical generators."""
        return FgAbelianGroup.from_invariants(self.invariant_factors, self.free_rank)

    def direct_sum(self, other):
        return FgAbelianGroup(
            self.ambient_rank + other.ambient_rank,
            IntMatrix.block_diagonal([self.relations, other.relations]),
        )

    # Elements

    def normal_form(self, vector):
        """
        Canonical coordinates of an ambient vector: one residue per invariant
        factor followed by the free coordinates.
        """
        vector = tuple(vector)
        if len(vector) != self.ambient_rank:
            raise InputError(f'vector of length {len(vector)} in a group with {self.ambient_rank} generators')
        coords = self._to_canonical.apply(vector)
        torsion = []
        free = []
        for t, c in enumerate(coords):
            if t < len(self._diagonal):
                d = self._diagonal[t]
                if d > 1:
                    torsion.append(c % d)
            else:
                free.append(c)
        return tuple(torsion + free)

    def lift(self, canonical):
        """An ambient vector whose normal form is `canonical`."""
        canonical = tuple(canonical)
        if len(canonical) != self.canonical_rank:
            raise InputError(f'expected {self.canonical_rank} canonical coordinates, got {len(canonical)}')
        full = []
        it = iter(canonical)
        for t in range(self.ambient_rank):
            if t < len(self._diagonal) and self._diagonal[t] == 1:
                full.append(0)
            else:
                full.append(next(it))
        return self._from_canonical.apply(full)

    def contains(self, vector):
        """True when `vector` lies in the relation lattice (is zero in G)."""
        return not any(self.normal_form(vector))

    def equal(self, v, w):
        return self.normal_form(v) == self.normal_form(w)

    def generators(self):
        """Ambient lifts of the canonical generators."""
        k = self.canonical_rank
        return [self.lift(tuple(1 if i == j else 0 for i in range(k))) for j in range(k)]

    # Comparison

    def __eq__(self, other):
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return (self.invariant_factors, self.free_rank) == (other.invariant_factors, other.free_rank)

    def __hash__(self):
        return hash((self.invariant_factors, self.free_rank))

    def __str__(self):
        parts = [f'Z/{d}' for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.append('Z')
        elif self.free_rank > 1:
            parts.append(f'Z^{self.free_rank}')
        return ' ⊕ '.join(parts) if parts else '0'

    def __repr__(self):
        return f'FgAbelianGroup({self})'


def group_from_relations(ambient_rank, relations):
    """The group Z^ambient_rank / <relations>, relations given as rows."""
    return FgAbelianGroup(ambient_rank, relations)


def quotient(group, generators):
    """G / <generators>, the generators given as ambient vectors."""
    generators = [tuple(v) for v in generators]
    extra = IntMatrix.from_rows(generators, group.ambient_rank) if generators else IntMatrix.zeros(0, group.ambient_rank)
    return FgAbelianGroup(group.ambient_rank, IntMatrix.vstack([group.relations, extra], group.ambient_rank))


def torsion_subgroup(group, n):
    """_nG, the elements killed by n: ⊕ Z/gcd(n, d_i)."""
    n = int(n)
    if n < 1:
        raise InputError('torsion index must be a positive integer')
    return FgAbelianGroup.from_invariants([gcd(n, d) for d in group.invariant_factors])
