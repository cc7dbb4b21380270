"""
Inhomogeneous (bar) cochains of a finite group with values in a G-module.

A degree-n cochain is a function G^n -> M stored as |G|^n blocks of
ambient coordinates; the block of the tuple (g1, ..., gn) sits at the
mixed-radix index g1·|G|^(n-1) + ... + gn.

The coboundary is

    (d c)(g0, ..., gn) = g0·c(g1, ..., gn)
                         + sum_i (-1)^i c(g0, ..., g(i-1)·gi, ..., gn)
                         + (-1)^(n+1) c(g0, ..., g(n-1)).
"""

import logging
from itertools import product

from django.conf import settings

from picdescent.exceptions import GuardExceeded, InputError, UnsupportedDegreeError
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

logger = logging.getLogger(__name__)

MAX_DEGREE = 2


def check_degree(degree, maximum=MAX_DEGREE):
    if not isinstance(degree, int) or degree < 0:
        raise InputError(f'degree must be a non-negative integer, got {degree!r}')
    if degree > maximum:
        raise UnsupportedDegreeError()


def guard(group, degree, rank, blocks=None):
    """
    Reject cochain spaces with more than COHOMOLOGY_MAX_COORDINATES
    coordinates. `blocks` overrides |G|^degree for partial row sets.
    """
    size = (group.order ** degree if blocks is None else blocks) * rank
    limit = settings.COHOMOLOGY_MAX_COORDINATES
    if size > limit:
        logger.warning('cochain guard: %d coordinates in degree %d over %s (limit %d)',
                       size, degree, group, limit)
        raise GuardExceeded(f'{size} cochain coordinates in degree {degree} exceed the limit of {limit}')
    return size


def tuple_index(group, elements):
    index = 0
    for g in elements:
        index = index * group.order + g
    return index


def tuples(group, degree):
    return product(range(group.order), repeat=degree)


def _terms(group, t):
    """(sign, input tuple, acts) for each summand of (d c)(t)."""
    k = len(t) - 1
    terms = [(1, t[1:], True)]
    for i in range(1, k + 1):
        merged = t[:i - 1] + (group.mul(t[i - 1], t[i]),) + t[i + 1:]
        terms.append((-1 if i % 2 else 1, merged, False))
    terms.append((1 if (k + 1) % 2 == 0 else -1, t[:k], False))
    return terms


def coboundary_matrix(module, degree, first=None):
    """
    d^degree : C^degree -> C^(degree+1) as a sparse matrix.

    With `first` given, only rows for tuples whose first entry lies in
    `first` are built; for a generating set this has the same kernel.
    """
    G = module.group
    r = module.ambient_rank
    leading = list(G.elements) if first is None else list(first)
    guard(G, degree + 1, r, blocks=len(leading) * G.order ** degree)
    rows = []
    for g0 in leading:
        for rest in tuples(G, degree):
            t = (g0,) + rest
            terms = _terms(G, t)
            for i in range(r):
                row = {}
                for sign, source, acts in terms:
                    offset = tuple_index(G, source) * r
                    if acts:
                        for j, v in module.action[g0].sparse_row(i):
                            row[offset + j] = row.get(offset + j, 0) + sign * v
                    else:
                        row[offset + i] = row.get(offset + i, 0) + sign
                rows.append(row)
    logger.debug('coboundary d^%d over %s: %dx%d', degree, G, len(rows), G.order ** degree * r)
    return IntMatrix(len(rows), G.order ** degree * r, rows)


def apply_coboundary(module, degree, cochain):
    """d^degree applied to one cochain vector, over every output tuple."""
    G = module.group
    r = module.ambient_rank
    cochain = tuple(cochain)
    if len(cochain) != G.order ** degree * r:
        raise InputError(f'a degree-{degree} cochain has {G.order ** degree * r} coordinates, got {len(cochain)}')
    guard(G, degree + 1, r)
    out = []
    for t in tuples(G, degree + 1):
        value = [0] * r
        for sign, source, acts in _terms(G, t):
            offset = tuple_index(G, source) * r
            block = cochain[offset:offset + r]
            if acts:
                block = module.act(t[0], block)
            for i, x in enumerate(block):
                if x:
                    value[i] += sign * x
        out.extend(value)
    return tuple(out)


def cochain_relations(module, degree, first=None):
    """Relation vectors of C^degree: one copy of M's relations per block."""
    G = module.group
    r = module.ambient_rank
    relations = module.relation_vectors
    if not relations:
        return []
    blocks = G.order ** degree
    if first is not None:
        # rows of a restricted coboundary: |first|·|G|^(degree-1) blocks
        blocks = len(first) * G.order ** (degree - 1)
    size = blocks * r
    out = []
    for b in range(blocks):
        for relation in relations:
            vector = [0] * size
            vector[b * r:(b + 1) * r] = relation
            out.append(tuple(vector))
    return out


class CochainComplexSlice:
    """
    C^(n-1) -> C^n -> C^(n+1) around degree n.

    `coboundary_out` keeps only rows whose first group element is a
    generator; `coboundary_in` is complete.
    """

    def __init__(self, module, degree):
        check_degree(degree)
        G = module.group
        self.module = module
        self.degree = degree
        self.rank = guard(G, degree, module.ambient_rank)
        # the trivial group still needs the row for its identity
        self.generators = G.generators() or (0,)
        self.coboundary_out = coboundary_matrix(module, degree, first=self.generators)
        self.coboundary_in = coboundary_matrix(module, degree - 1) if degree > 0 else None
        self._cochain_group = None

    @property
    def cochain_group(self):
        if self._cochain_group is None:
            self._cochain_group = FgAbelianGroup(self.rank, cochain_relations(self.module, self.degree) or None)
        return self._cochain_group

    @property
    def cycle_relations(self):
        """Relations of the target of the restricted outgoing coboundary."""
        return cochain_relations(self.module, self.degree + 1, first=self.generators)

    @property
    def relations(self):
        return cochain_relations(self.module, self.degree)

    def is_cocycle(self, cochain):
        image = self.coboundary_out.apply(cochain)
        if not self.module.relation_vectors:
            return not any(image)
        r = self.module.ambient_rank
        u = self.module.underlying
        return all(u.contains(image[i:i + r]) for i in range(0, len(image), r))

    def __repr__(self):
        return f'CochainComplexSlice(degree={self.degree}, rank={self.rank})'
