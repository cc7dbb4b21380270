"""
Subquotients and homomorphisms of presented abelian groups.

Everything here works on ambient coordinates: a homomorphism is an integer
matrix acting on column vectors, well defined when it carries the source
relation lattice into the target relation lattice.
"""

import logging

from picdescent.exceptions import InconsistentDataError, InputError

from .matrices import IntMatrix
from .models import FgAbelianGroup, quotient
from .normal_forms import LinearSystem, lattice_basis

logger = logging.getLogger(__name__)


def _columns(matrix):
    if matrix is None:
        return []
    return matrix.columns()


class Subquotient:
    """
    ker(f mod target relations) / (im(g) + source relations).

    `basis` is a Z-basis of the kernel lattice inside Z^a (a = f.cols);
    `group` presents the subquotient on that basis. Elements of the kernel
    lattice are mapped to canonical coordinates by `coordinates`.
    """

    def __init__(self, f, g=None, target_relations=(), source_relations=()):
        a = f.cols
        target_relations = [tuple(r) for r in target_relations]
        if target_relations:
            combined = IntMatrix.hstack(
                [f, IntMatrix.from_columns(target_relations, f.rows).scale(-1)], f.rows
            )
        else:
            combined = f
        logger.debug('Subquotient: kernel of %dx%d (%d relation columns)',
                     combined.rows, combined.cols, len(target_relations))
        kernel = LinearSystem(combined).kernel_basis()
        self.ambient_rank = a
        self.basis = lattice_basis((v[:a] for v in kernel), a)
        self._system = LinearSystem(IntMatrix.from_columns(self.basis, a)) if self.basis else None

        denominators = _columns(g) + [tuple(r) for r in source_relations]
        coordinates = []
        for v in denominators:
            c = self.basis_coordinates(v)
            if c is None:
                raise InconsistentDataError(
                    'the composite of the two maps is nonzero modulo relations'
                )
            coordinates.append(c)
        self.group = FgAbelianGroup(len(self.basis), coordinates)

    def basis_coordinates(self, vector):
        vector = tuple(vector)
        if len(vector) != self.ambient_rank:
            raise InputError(f'vector of length {len(vector)} in a lattice of rank {self.ambient_rank}')
        if self._system is None:
            return () if not any(vector) else None
        return self._system.solve(vector)

    def contains(self, vector):
        return self.basis_coordinates(vector) is not None

    def coordinates(self, vector):
        """Canonical coordinates of the class of a kernel element."""
        c = self.basis_coordinates(vector)
        if c is None:
            raise InconsistentDataError('vector does not lie in the kernel')
        return self.group.normal_form(c)

    def representative(self, canonical):
        """A kernel element whose class has the given canonical coordinates."""
        c = self.group.lift(canonical)
        out = [0] * self.ambient_rank
        for coefficient, b in zip(c, self.basis):
            if coefficient:
                for i, x in enumerate(b):
                    if x:
                        out[i] += coefficient * x
        return tuple(out)

    def generators(self):
        k = self.group.canonical_rank
        return [self.representative(tuple(1 if i == j else 0 for i in range(k))) for j in range(k)]


def kernel_mod_image(f, g, target_relations, source_relations=()):
    """
    ker(f mod target_relations) / im(g) as an abstract group.

    Rejects complexes whose composite f·g is nonzero modulo the target
    relations.
    """
    target_relations = list(target_relations)
    if g is not None:
        if g.rows != f.cols:
            raise InputError(f'cannot compose a {f.rows}x{f.cols} map after a {g.rows}x{g.cols} map')
        target = FgAbelianGroup(f.rows, target_relations or None)
        for column in g.columns():
            if not target.contains(f.apply(column)):
                raise InconsistentDataError('the composite of the two maps is nonzero modulo relations')
    return Subquotient(f, g, target_relations, source_relations).group


class GroupHomomorphism:
    """
    A homomorphism source -> target given by a matrix on ambient coordinates
    (shape target.ambient_rank x source.ambient_rank).
    """

    def __init__(self, source, target, matrix, check=True):
        if matrix.shape != (target.ambient_rank, source.ambient_rank):
            raise InputError(
                f'a map {source.ambient_rank} -> {target.ambient_rank} needs a '
                f'{target.ambient_rank}x{source.ambient_rank} matrix, got {matrix.rows}x{matrix.cols}'
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            for r in source.relation_vectors:
                if not target.contains(matrix.apply(r)):
                    raise InconsistentDataError('map does not respect the relations of its source')

    def __call__(self, vector):
        return self.matrix.apply(vector)

    def images(self):
        return self.matrix.columns()

    def kernel_lattice(self):
        """Z-basis of the preimage of the target relation lattice."""
        return Subquotient(self.matrix, None, self.target.relation_vectors).basis

    def image_lattice(self):
        """Z-basis of im + target relations inside the target's ambient lattice."""
        return lattice_basis(list(self.images()) + list(self.target.relation_vectors),
                             self.target.ambient_rank)

    def kernel(self):
        return Subquotient(self.matrix, None, self.target.relation_vectors,
                           self.source.relation_vectors).group

    def image(self):
        return subgroup_presentation(self.images(), self.target)

    def cokernel(self):
        return quotient(self.target, self.images())

    def is_zero(self):
        return all(self.target.contains(v) for v in self.images())

    def is_injective(self):
        return self.kernel().is_trivial()

    def is_surjective(self):
        return self.cokernel().is_trivial()

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()

    def compose(self, inner):
        """self ∘ inner"""
        return GroupHomomorphism(inner.source, self.target, self.matrix @ inner.matrix, check=False)

    def __repr__(self):
        return f'GroupHomomorphism({self.source} -> {self.target})'


def subgroup_presentation(generators, group):
    """The subgroup of `group` generated by ambient vectors, as an abstract group."""
    dim = group.ambient_rank
    relations = list(group.relation_vectors)
    basis = lattice_basis([tuple(v) for v in generators] + relations, dim)
    if not basis:
        return FgAbelianGroup.trivial()
    system = LinearSystem(IntMatrix.from_columns(basis, dim))
    return FgAbelianGroup(len(basis), [system.solve(r) for r in relations])


def same_lattice(first, second, dimension):
    """True when two lists of vectors span the same sublattice of Z^dimension."""
    def spans(basis, vectors):
        if not basis:
            return not any(any(v) for v in vectors)
        system = LinearSystem(IntMatrix.from_columns(basis, dimension), track=False)
        return all(system.contains(v) for v in vectors)

    first = lattice_basis(first, dimension)
    second = lattice_basis(second, dimension)
    return spans(first, second) and spans(second, first)


def exact_at(incoming, outgoing):
    """True when im(incoming) = ker(outgoing) inside their common group."""
    middle = incoming.target
    if middle.ambient_rank != outgoing.source.ambient_rank:
        raise InputError('maps do not meet at a common group')
    return same_lattice(incoming.image_lattice(), outgoing.kernel_lattice(), middle.ambient_rank)
