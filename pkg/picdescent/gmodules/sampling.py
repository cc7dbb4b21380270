"""
Random and exhaustive fleets of groups, subgroups and modules for property
checks. Everything takes an explicit `random.Random` so runs are repeatable.
"""

from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

from .builtins import builtin_group
from .constructions import (
    coaugmentation_quotient, coset_coaugmentation, direct_sum, induced_module, permutation_module,
    reduce_mod, regular_module, trivial_module, twist,
)
from .models import Subgroup

SMALL_GROUPS = ('C1', 'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8', 'S3', 'D4', 'Q8')
CYCLIC_GROUPS = tuple(f'C{n}' for n in range(1, 13))


def subgroups(G):
    """All subgroups generated by at most two elements, smallest first."""
    found = set()
    for a in G.elements:
        for b in range(a, G.order):
            found.add(G.closure([a, b]))
    return [Subgroup(G, elements) for elements in sorted(found, key=lambda s: (len(s), s))]


def normal_subgroups(G):
    return [H for H in subgroups(G) if H.is_normal()]


def random_unimodular(n, rng, steps=6):
    """A product of random elementary matrices and sign changes."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        if n == 1 and rng.random() < 0.5:
            rows[0][0] = -1
        return IntMatrix.from_rows(rows, n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            rows[i][k] += q * rows[j][k]
    return IntMatrix.from_rows(rows, n)


def _candidates(G, rng, max_rank):
    """Module constructors over G whose ambient rank stays within max_rank."""
    n = G.order
    options = []
    options.append(lambda: trivial_module(G, FgAbelianGroup.free(1), name='Z'))
    options.append(lambda: trivial_module(
        G, FgAbelianGroup.from_invariants([rng.choice([2, 3, 4, 6])]), name='Z/d'))
    options.append(lambda: trivial_module(G, FgAbelianGroup.from_invariants([], 2), name='Z^2'))
    if n <= max_rank:
        options.append(lambda: regular_module(G))
        options.append(lambda: reduce_mod(regular_module(G), rng.choice([2, 3, 4])))
    if 2 <= n <= max_rank + 1:
        options.append(lambda: coaugmentation_quotient(G)[0])
    for H in subgroups(G):
        index = n // H.order
        if 1 < index <= max_rank:
            options.append(lambda H=H: permutation_module(G, H))
            options.append(lambda H=H: coset_coaugmentation(G, H)[0])
            options.append(lambda H=H: induced_module(
                G, H, trivial_module(H.group, FgAbelianGroup.from_invariants([rng.choice([2, 3])]))))
    return options


def random_module(G, rng, max_rank=4):
    """
    A module over G of ambient rank at most `max_rank`, assembled from the
    standard constructions, sometimes summed and twisted by a random basis
    change.
    """
    options = _candidates(G, rng, max_rank)
    module = rng.choice(options)()
    if module.ambient_rank < max_rank and rng.random() < 0.4:
        other = rng.choice(options)()
        if module.ambient_rank + other.ambient_rank <= max_rank:
            module = direct_sum([module, other])
    if module.ambient_rank and rng.random() < 0.5:
        module = twist(module, random_unimodular(module.ambient_rank, rng))
    return module


def random_group(rng, names=SMALL_GROUPS):
    return builtin_group(rng.choice(names))
