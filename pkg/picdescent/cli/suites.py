"""
The acceptance battery run by `manage.py suite paper`.

Each criterion takes a seeded random.Random and returns (cases, failures),
where failures are short strings naming the failing case. Sizes come from
the SUITE_* settings.
"""

import logging
import random
import time
from collections import namedtuple

from django.conf import settings
from sympy import factorint

from picdescent.cohomology.operations import (
    cohomology, cyclic_h_oracle, h1, h2, inflation_restriction, shapiro_check, six_term_sequence,
)
from picdescent.exceptions import InputError
from picdescent.gmodules.builtins import BUILTIN_NAMES, builtin_group
from picdescent.gmodules.constructions import (
    coaugmentation_quotient, coset_coaugmentation, multiplication_sequence, regular_module, split_sequence,
)
from picdescent.gmodules.sampling import (
    CYCLIC_GROUPS, SMALL_GROUPS, normal_subgroups, random_group, random_module, subgroups,
)
from picdescent.inseparable.derivations import class_census, verify_w_identities
from picdescent.picard.conductor import (
    Cusp, FiniteField, LocalizedIntegers, NodeLikeUnitQuotient, RationalField, conductor_square_pic,
    fraction_torsion_oracle, pic_torsion,
)
from picdescent.picard.descent import circle_model, descent_kernel, group_ring_pic
from picdescent.picard.models import supported_part
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup
from picdescent.zlattice.normal_forms import determinant, determinantal_divisor, smith_normal_form

logger = logging.getLogger(__name__)

SUITE_CHOICES = [
    ('paper', 'The full acceptance battery'),
]

CriterionResult = namedtuple('CriterionResult', ['number', 'name', 'cases', 'failures', 'elapsed'])

CRITERIA = {}


def criterion(number, name):
    def register(func):
        CRITERIA[number] = (name, func)
        return func
    return register


@criterion(1, 'group-ring Pic equals the abelianization')
def group_ring_battery(rng):
    cases, failures = 0, []
    for name in BUILTIN_NAMES:
        G = builtin_group(name)
        outcome = group_ring_pic(G)
        cases += 1
        if not outcome.matches_abelianization:
            failures.append(f'{name}: Pic = {outcome.pic}, G/[G,G] = {outcome.abelianization}')
        if not outcome.second_cohomology:
            failures.append(f'{name}: Pic = {outcome.pic} differs from H^2(G, Z)')
        if not outcome.connecting_isomorphism:
            failures.append(f'{name}: H^1(G, L) -> H^2(G, Z) is not an isomorphism')
    return cases, failures


@criterion(2, 'circle descent kernel is Z/2')
def circle_kernel(rng):
    kernel = descent_kernel(circle_model())
    if kernel != FgAbelianGroup.cyclic(2):
        return 1, [f'circle: kernel = {kernel}']
    return 1, []


@criterion(3, 'H^1 and H^2 of ZG vanish')
def free_module_vanishing(rng):
    cases, failures = 0, []
    for name in BUILTIN_NAMES:
        module = regular_module(builtin_group(name))
        for degree, value in ((1, h1(module)), (2, h2(module))):
            cases += 1
            if not value.is_trivial():
                failures.append(f'{name}: H^{degree}(G, ZG) = {value}')
    return cases, failures


@criterion(4, '|G| annihilates H^1 and H^2')
def annihilation(rng):
    cases, failures = 0, []
    for _ in range(settings.SUITE_RANDOM_MODULES):
        G = random_group(rng, SMALL_GROUPS)
        module = random_module(G, rng)
        for degree in (1, 2):
            value = cohomology(module, degree)
            cases += 1
            if not value.is_annihilated_by(G.order):
                failures.append(f'{G} {module.name}: H^{degree} = {value}')
    return cases, failures


@criterion(5, 'bar cohomology agrees with the cyclic formulas')
def cyclic_oracle(rng):
    cases, failures = 0, []
    for _ in range(settings.SUITE_RANDOM_MODULES):
        G = random_group(rng, CYCLIC_GROUPS)
        module = random_module(G, rng)
        for degree in (1, 2):
            computed, expected = cohomology(module, degree), cyclic_h_oracle(module, degree)
            cases += 1
            if computed != expected:
                failures.append(f'{G} {module.name}: H^{degree} = {computed}, cyclic formula gives {expected}')
    return cases, failures


def _random_sequence(G, rng):
    kind = rng.choice(('multiplication', 'split', 'coset'))
    if kind == 'multiplication':
        module = random_module(G, rng, max_rank=3)
        if module.relation_vectors:
            return None
        n = rng.choice((2, 3))
        return f'{G}: {module.name} -{n}-> {module.name}', multiplication_sequence(module, n)
    if kind == 'split':
        A, C = random_module(G, rng, max_rank=2), random_module(G, rng, max_rank=2)
        return f'{G}: {A.name} -> {A.name} ⊕ {C.name}', split_sequence(A, C)
    proper = [H for H in subgroups(G) if 1 < G.order // H.order <= 4]
    if not proper:
        return None
    H = rng.choice(proper)
    return f'{G}: Z -> Z[G/H], |H| = {H.order}', coset_coaugmentation(G, H)[1]


def _proper_pairs(select):
    pairs = []
    for name in SMALL_GROUPS:
        G = builtin_group(name)
        pairs.extend((G, H) for H in select(G) if 1 < H.order < G.order)
    return pairs


@criterion(6, 'six-term, inflation-restriction and Shapiro exactness')
def exactness(rng):
    cases, failures = 0, []

    sequences = []
    for name in BUILTIN_NAMES:
        G = builtin_group(name)
        sequences.append((f'{name}: Z -> ZG -> L', coaugmentation_quotient(G)[1], True))
    while len(sequences) < settings.SUITE_EXACTNESS_SEQUENCES:
        drawn = _random_sequence(random_group(rng, SMALL_GROUPS), rng)
        if drawn is not None:
            sequences.append((*drawn, False))
    for label, ses, coaugmentation in sequences:
        sequence = six_term_sequence(ses)
        cases += 1
        if not sequence.is_exact():
            failures.append(f'{label}: not exact at {", ".join(sequence.failures())}')
        if coaugmentation and not sequence.connecting_maps[1].is_isomorphism():
            failures.append(f'{label}: H^1(L) -> H^2(Z) is not an isomorphism')

    normal_pairs = _proper_pairs(normal_subgroups)
    for _ in range(settings.SUITE_INFLATION_TRIPLES):
        G, N = rng.choice(normal_pairs)
        module = random_module(G, rng, max_rank=3)
        outcome = inflation_restriction(module, N)
        cases += 1
        if not (outcome.inflation_injective and outcome.composite_zero and outcome.exact):
            failures.append(f'{G} ⊳ N of order {N.order}, {module.name}: inflation-restriction fails')

    subgroup_pairs = _proper_pairs(subgroups)
    for _ in range(settings.SUITE_SHAPIRO_TRIPLES):
        G, H = rng.choice(subgroup_pairs)
        module = random_module(H.group, rng, max_rank=2)
        outcome = shapiro_check(G, H, module)
        cases += 1
        if not outcome.isomorphic:
            failures.append(
                f'{G} > H of order {H.order}, {module.name}: '
                f'{outcome.h1_induced} differs from {outcome.h1_over_subgroup}'
            )
    return cases, failures


def _prime_powers(limit):
    return [q for q in range(2, limit + 1) if len(factorint(q)) == 1]


@criterion(7, 'conductor-square torsion')
def conductor_torsion(rng):
    cases, failures = 0, []
    rings = [RationalField()] + [LocalizedIntegers(m) for m in (2, 6, 30)]
    for ring in rings:
        pic = conductor_square_pic(NodeLikeUnitQuotient(ring))
        m = getattr(ring, 'm', None)
        for n in range(1, 51):
            expected = n if m is None else supported_part(n, ring.primes)
            torsion = pic_torsion(pic, n)
            census = fraction_torsion_oracle(m, n)
            cases += 1
            if torsion != FgAbelianGroup.cyclic(expected):
                failures.append(f'{ring.name}, n = {n}: torsion {torsion}, expected Z/{expected}')
            if census.size != expected or not census.cyclic:
                failures.append(f'{ring.name}, n = {n}: enumeration found {census.size} classes')
    for q in _prime_powers(27):
        (p, e), = factorint(q).items()
        pic = conductor_square_pic(Cusp(FiniteField(q)))
        cases += 1
        if pic.finite_group() != FgAbelianGroup.from_invariants([p] * e):
            failures.append(f'cusp over F_{q}: Pic = {pic.description}')
    return cases, failures


INSEPARABLE_PAIRS = ((2, 4), (3, 3), (3, 9), (5, 5))


@criterion(8, 'inseparable identities and class separation')
def inseparable(rng):
    cases, failures = 0, []
    for p, q in INSEPARABLE_PAIRS:
        r = q // p
        cases += 1
        if not verify_w_identities(p, q):
            failures.append(f'(p, q) = ({p}, {q}): identities fail')
        census = class_census(p, q)
        for separation in census.separations:
            if separation.z_degree != r * (q - 2):
                failures.append(
                    f'(p, q) = ({p}, {q}), pair {separation.c1}, {separation.c2}: '
                    f'Z-degree {separation.z_degree}, expected {r * (q - 2)}'
                )
        if census.class_count != p:
            failures.append(f'(p, q) = ({p}, {q}): {census.class_count} classes, expected {p}')
    return cases, failures


def _smith_failures(m):
    U, D, V = smith_normal_form(m)
    problems = []
    if U @ m @ V != D:
        problems.append('D != U·m·V')
    if determinant(U) not in (1, -1) or determinant(V) not in (1, -1):
        problems.append('transform not unimodular')
    size = min(m.rows, m.cols)
    diagonal = [D[i, i] for i in range(size)]
    if sum(1 for d in diagonal if d) != D.nonzero_count():
        problems.append('D is not diagonal')
    if any(d < 0 for d in diagonal):
        problems.append('negative diagonal entry')
    for smaller, larger in zip(diagonal, diagonal[1:]):
        if (smaller and larger % smaller) or (not smaller and larger):
            problems.append('divisibility chain broken')
            break
    product = 1
    for k in range(1, size + 1):
        product *= diagonal[k - 1]
        if determinantal_divisor(m, k) != product:
            problems.append(f'determinantal divisor {k} differs')
            break
    return problems


@criterion(9, 'Smith normal form properties')
def smith_properties(rng):
    cases, failures = 0, []
    for index in range(settings.SUITE_RANDOM_MATRICES):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = IntMatrix.from_rows([[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)], cols)
        cases += 1
        for problem in _smith_failures(m):
            failures.append(f'matrix {index} ({rows}x{cols}): {problem}')
    return cases, failures


def run_criterion(number, seed):
    if number not in CRITERIA:
        raise InputError(f'unknown criterion {number}; expected one of {sorted(CRITERIA)}')
    name, func = CRITERIA[number]
    logger.info('criterion %d (%s): start', number, name)
    start = time.perf_counter()
    cases, failures = func(random.Random(seed + number))
    elapsed = time.perf_counter() - start
    logger.info('criterion %d (%s): %d cases, %d failures in %.2fs', number, name, cases, len(failures), elapsed)
    return CriterionResult(number, name, cases, failures, elapsed)


def run_suite(name='paper', only=None, seed=None):
    """Run every criterion of the named suite, or just `only`."""
    if name not in dict(SUITE_CHOICES):
        raise InputError(f'unknown suite {name!r}')
    seed = settings.SUITE_RANDOM_SEED if seed is None else seed
    numbers = sorted(CRITERIA) if only is None else [only]
    return [run_criterion(number, seed) for number in numbers]
