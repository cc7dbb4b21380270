"""
Cohomology groups with explicit cocycle representatives, and the maps
between them.
"""

import logging

from picdescent.exceptions import InconsistentDataError
from picdescent.zlattice.homomorphisms import GroupHomomorphism, Subquotient
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

from .cochains import CochainComplexSlice, tuple_index, tuples

logger = logging.getLogger(__name__)


class CohomologyGroup:
    """
    H^degree(G, M) = ker(d^degree) / im(d^(degree-1)), modulo relations.

    Classes are addressed by canonical coordinates (one residue per
    invariant factor, then free coordinates); `representative` and
    `class_of` translate between those and cocycle vectors.
    """

    def __init__(self, module, degree):
        self.module = module
        self.degree = degree
        self.slice = CochainComplexSlice(module, degree)
        self.subquotient = Subquotient(
            self.slice.coboundary_out,
            self.slice.coboundary_in,
            self.slice.cycle_relations,
            self.slice.relations,
        )
        self.group = self.subquotient.group
        self.canonical = FgAbelianGroup.from_invariants(self.group.invariant_factors, self.group.free_rank)
        logger.debug('H^%d(%s, %s) = %s', degree, module.group, module.name, self.group)

    @property
    def rank(self):
        return self.group.canonical_rank

    def representative(self, coordinates):
        return self.subquotient.representative(coordinates)

    def class_of(self, cocycle):
        if not self.subquotient.contains(cocycle):
            raise InconsistentDataError(f'cochain is not a {self.degree}-cocycle')
        return self.subquotient.coordinates(cocycle)

    def generators(self):
        k = self.rank
        out = []
        for j in range(k):
            coordinates = tuple(1 if i == j else 0 for i in range(k))
            out.append(CohomologyClass(self, self.representative(coordinates), check=False))
        return out

    def zero(self):
        return CohomologyClass(self, (0,) * self.slice.rank, check=False)

    def __str__(self):
        return str(self.group)

    def __repr__(self):
        return f'CohomologyGroup(H^{self.degree}({self.module.group}, {self.module.name}) = {self.group})'


class CohomologyClass:
    """
    A class in H^degree given by a representative cocycle.

    For degree 1 the cocycle is a crossed homomorphism
    f(gh) = f(g) + g·f(h).
    """

    def __init__(self, parent, cocycle, check=True):
        self.parent = parent
        self.cocycle = tuple(cocycle)
        if check and not parent.slice.is_cocycle(self.cocycle):
            raise InconsistentDataError(f'cochain is not a {parent.degree}-cocycle')

    @property
    def degree(self):
        return self.parent.degree

    @property
    def module(self):
        return self.parent.module

    @property
    def coordinates(self):
        return self.parent.class_of(self.cocycle)

    def value(self, *elements):
        """The cocycle evaluated at a tuple of group elements."""
        r = self.module.ambient_rank
        offset = tuple_index(self.module.group, elements) * r
        return self.cocycle[offset:offset + r]

    def as_function(self):
        G = self.module.group
        return {t: self.value(*t) for t in tuples(G, self.degree)}

    def is_zero(self):
        return not any(self.coordinates)

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.parent is other.parent and self.coordinates == other.coordinates

    def __hash__(self):
        return hash((id(self.parent), self.coordinates))

    def __repr__(self):
        return f'CohomologyClass(degree={self.degree}, coordinates={self.coordinates})'


class CohomologyMap:
    """
    A homomorphism between two cohomology groups on canonical coordinates.

    `images[j]` holds the target coordinates of the j-th canonical
    generator of the source. Well-definedness modulo the invariant factors
    is checked on construction.
    """

    def __init__(self, source, target, images, name=None):
        self.source = source
        self.target = target
        self.name = name or 'map'
        matrix = IntMatrix.from_columns(images, target.rank)
        try:
            self.homomorphism = GroupHomomorphism(source.canonical, target.canonical, matrix)
        except InconsistentDataError:
            raise InconsistentDataError(f'{self.name} is not well defined on cohomology')

    @classmethod
    def from_cochain_map(cls, source, target, cochain_map, name=None):
        """Induce a map from a function sending source cocycles to target cocycles."""
        images = [target.class_of(cochain_map(c.cocycle)) for c in source.generators()]
        return cls(source, target, images, name=name)

    @property
    def matrix(self):
        return self.homomorphism.matrix

    def __call__(self, coordinates):
        return self.target.canonical.normal_form(self.homomorphism(coordinates))

    def is_zero(self):
        return self.homomorphism.is_zero()

    def is_injective(self):
        return self.homomorphism.is_injective()

    def is_surjective(self):
        return self.homomorphism.is_surjective()

    def is_isomorphism(self):
        return self.homomorphism.is_isomorphism()

    def kernel(self):
        return self.homomorphism.kernel()

    def image(self):
        return self.homomorphism.image()

    def cokernel(self):
        return self.homomorphism.cokernel()

    def __repr__(self):
        return f'CohomologyMap({self.name}: {self.source.group} -> {self.target.group})'
