import random
import time

from django.test import SimpleTestCase, override_settings

from picdescent.exceptions import GuardExceeded, InconsistentDataError, InputError, UnsupportedDegreeError
from picdescent.gmodules.builtins import BUILTIN_NAMES, builtin_group
from picdescent.gmodules.constructions import (
    abelianization, coaugmentation_quotient, direct_sum, induced_module, multiplication_sequence,
    negation_lattice, reduce_mod, regular_module, split_sequence, trivial_module,
)
from picdescent.gmodules.models import GModule, Subgroup
from picdescent.gmodules.sampling import CYCLIC_GROUPS, random_module
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

from .cochains import CochainComplexSlice, apply_coboundary, coboundary_matrix
from .models import CohomologyClass
from .operations import (
    character_group, cohomology, cohomology_group, crossed_homomorphisms, cyclic_h_oracle, h0, h1, h2,
    hom_from_group, inflation, inflation_restriction, is_crossed_homomorphism, rational_vanishing,
    restriction, shapiro_check, six_term_sequence,
)
from .serializers import SixTermSequenceSerializer

Z = FgAbelianGroup.free(1)


def cyclic_sign_module(G, kernel):
    """Z with elements outside `kernel` acting by -1."""
    action = [IntMatrix.from_rows([[1 if g in kernel else -1]]) for g in G.elements]
    return GModule(G, Z, action, name='Z(sign)')


class CochainTest(SimpleTestCase):
    """
    Test cases for bar coboundaries
    """

    def test_coboundaries_compose_to_zero(self):
        """Test d^1·d^0 = 0 and d^2·d^1 = 0"""
        for module in (regular_module(builtin_group('S3')), negation_lattice()):
            d0 = coboundary_matrix(module, 0)
            d1 = coboundary_matrix(module, 1)
            d2 = coboundary_matrix(module, 2)
            self.assertTrue((d1 @ d0).is_zero())
            self.assertTrue((d2 @ d1).is_zero())

    def test_apply_matches_matrix(self):
        """Test the vector form of d^1 agrees with the matrix"""
        module = regular_module(builtin_group('C3'))
        rng = random.Random(2)
        cochain = tuple(rng.randint(-3, 3) for _ in range(9))
        self.assertEqual(apply_coboundary(module, 1, cochain), coboundary_matrix(module, 1).apply(cochain))

    def test_cochain_group(self):
        """Test C^1(C3, ZC3) is free of rank 9"""
        piece = CochainComplexSlice(regular_module(builtin_group('C3')), 1)
        self.assertEqual(piece.cochain_group, FgAbelianGroup.free(9))

    @override_settings(COHOMOLOGY_MAX_COORDINATES=100)
    def test_guard(self):
        """Test oversized cochain groups are refused"""
        with self.assertRaises(GuardExceeded):
            h2(regular_module(builtin_group('C6')))

    def test_degree_cap(self):
        """Test degree 3 is refused"""
        with self.assertRaises(UnsupportedDegreeError):
            cohomology_group(negation_lattice(), 3)


class CohomologyGroupTest(SimpleTestCase):
    """
    Test cases for H^0, H^1 and H^2
    """

    def test_h0(self):
        """Test invariants of trivial, negation and regular modules"""
        self.assertEqual(h0(trivial_module(builtin_group('S3'), Z)), Z)
        self.assertTrue(h0(negation_lattice()).is_trivial())
        self.assertEqual(h0(regular_module(builtin_group('S3'))), Z)

    def test_h1_examples(self):
        """Test the worked H^1 values"""
        for name in ('C2', 'C3', 'S3'):
            self.assertTrue(h1(regular_module(builtin_group(name))).is_trivial())
        self.assertEqual(h1(negation_lattice()), FgAbelianGroup.cyclic(2))
        self.assertTrue(h1(trivial_module(builtin_group('C2'), Z)).is_trivial())
        L, _ = coaugmentation_quotient(builtin_group('S3'))
        self.assertEqual(h1(L), FgAbelianGroup.cyclic(2))

    def test_h2_examples(self):
        """Test the worked H^2 values"""
        self.assertEqual(h2(trivial_module(builtin_group('C2'), Z)), FgAbelianGroup.cyclic(2))
        self.assertTrue(h2(regular_module(builtin_group('C3'))).is_trivial())
        self.assertEqual(h2(trivial_module(builtin_group('S3'), Z)), FgAbelianGroup.cyclic(2))

    def test_fast_path_matches_subquotient(self):
        """Test both H^n computations agree on relation-free modules"""
        G = builtin_group('C4')
        for module in (trivial_module(G, Z), regular_module(G), cyclic_sign_module(G, (0, 2))):
            for degree in (1, 2):
                self.assertEqual(cohomology_group(module, degree).group,
                                 h1(module) if degree == 1 else h2(module))

    def test_cone_path_matches_subquotient(self):
        """Test both H^n computations agree on modules with relations"""
        modules = (
            trivial_module(builtin_group('C3'), FgAbelianGroup.cyclic(3)),
            reduce_mod(regular_module(builtin_group('C2')), 2),
            trivial_module(builtin_group('S3'), FgAbelianGroup.cyclic(2)),
            direct_sum([negation_lattice(), trivial_module(builtin_group('C2'), FgAbelianGroup.cyclic(4))]),
        )
        for module in modules:
            for degree in (1, 2):
                self.assertEqual(cohomology(module, degree), cohomology_group(module, degree).group, module)

    def test_induced_torsion_over_c9(self):
        """Test H^n(C9, Ind(Z/3) ⊕ Z) against the cyclic formulas, quickly"""
        G = builtin_group('C9')
        H = Subgroup(G, G.closure([3]))
        induced = induced_module(G, H, trivial_module(H.group, FgAbelianGroup.cyclic(3)))
        module = direct_sum([induced, trivial_module(G, Z)])
        start = time.perf_counter()
        self.assertEqual(h2(module), FgAbelianGroup.from_invariants([3, 9]))
        self.assertEqual(h1(module), FgAbelianGroup.cyclic(3))
        self.assertLess(time.perf_counter() - start, 5)
        self.assertEqual(h2(module), cyclic_h_oracle(module, 2))

    def test_action_only_modulo_relations(self):
        """Test C2 acting on Z/4 by 3, a homomorphism only modulo 4"""
        G = builtin_group('C2')
        module = GModule(G, FgAbelianGroup.cyclic(4), [IntMatrix.identity(1), IntMatrix.from_rows([[3]])])
        self.assertEqual(h1(module), FgAbelianGroup.cyclic(2))
        self.assertEqual(h2(module), FgAbelianGroup.cyclic(2))
        self.assertEqual(h1(module), cyclic_h_oracle(module, 1))

    def test_torsion_coefficients(self):
        """Test H^1(C2, Z/4) = Hom(C2, Z/4) = Z/2"""
        module = trivial_module(builtin_group('C2'), FgAbelianGroup.cyclic(4))
        self.assertEqual(h1(module), FgAbelianGroup.cyclic(2))
        self.assertEqual(h2(module), FgAbelianGroup.cyclic(2))

    def test_free_vanishing(self):
        """Test H^1 and H^2 of every regular module vanish"""
        for name in BUILTIN_NAMES:
            if name == 'S4':
                continue
            module = regular_module(builtin_group(name))
            self.assertTrue(h1(module).is_trivial(), name)
            self.assertTrue(h2(module).is_trivial(), name)

    def test_trivial_group(self):
        """Test higher cohomology of the trivial group vanishes"""
        G = builtin_group('C1')
        module = trivial_module(G, FgAbelianGroup.from_invariants([3], 2))
        self.assertTrue(h1(module).is_trivial())
        self.assertTrue(h2(module).is_trivial())

    def test_additivity(self):
        """Test H^1(M ⊕ N) = H^1(M) ⊕ H^1(N)"""
        G = builtin_group('S3')
        M = coaugmentation_quotient(G)[0]
        N = trivial_module(G, FgAbelianGroup.cyclic(4))
        self.assertEqual(h1(direct_sum([M, N])), h1(M).direct_sum(h1(N)))

    def test_annihilation_on_random_modules(self):
        """Test |G| kills H^1 and H^2 of sampled modules"""
        rng = random.Random(13)
        for name in ('C2', 'C4', 'S3', 'Q8'):
            G = builtin_group(name)
            for _ in range(3):
                module = random_module(G, rng)
                self.assertTrue(h1(module).is_annihilated_by(G.order), module)
                self.assertTrue(h2(module).is_annihilated_by(G.order), module)

    def test_trivial_action_law(self):
        """Test H^1 of a trivial module is Hom(G, M)"""
        for name in ('C4', 'S3', 'Q8'):
            G = builtin_group(name)
            for M in (FgAbelianGroup.cyclic(4), FgAbelianGroup.from_invariants([2, 6]), Z):
                self.assertEqual(h1(trivial_module(G, M)), hom_from_group(G, M))


class HomAndCharacterTest(SimpleTestCase):
    """
    Test cases for Hom(G, M) and the character group
    """

    def test_hom_examples(self):
        """Test the worked Hom values"""
        self.assertEqual(hom_from_group(builtin_group('C2'), FgAbelianGroup.cyclic(4)), FgAbelianGroup.cyclic(2))
        self.assertTrue(hom_from_group(builtin_group('S3'), FgAbelianGroup.cyclic(5)).is_trivial())
        self.assertTrue(hom_from_group(builtin_group('Q8'), FgAbelianGroup.trivial()).is_trivial())

    def test_hom_against_enumeration(self):
        """Test Hom(C2, Z/4) has two elements by listing maps"""
        maps = [x for x in range(4) if (2 * x) % 4 == 0]
        self.assertEqual(hom_from_group(builtin_group('C2'), FgAbelianGroup.cyclic(4)).order(), len(maps))

    def test_character_group_chain(self):
        """Test H^2(G, Z), Hom(G, Q/Z) and G/[G, G] agree"""
        for name in ('C4', 'C6', 'S3', 'D4', 'Q8'):
            G = builtin_group(name)
            self.assertEqual(character_group(G), abelianization(G))
            self.assertEqual(h2(trivial_module(G, Z)), abelianization(G))


class CrossedHomomorphismTest(SimpleTestCase):
    """
    Test cases for cocycles and classes
    """

    def test_negation_lattice(self):
        """Test crossed homomorphisms C2 -> Z(-1)"""
        module = negation_lattice()
        basis = crossed_homomorphisms(module)
        self.assertEqual(len(basis), 1)
        self.assertTrue(is_crossed_homomorphism(module, basis[0]))
        self.assertEqual(basis[0][0], (0,))

    def test_non_cocycle_rejected(self):
        """Test a function failing the cocycle rule is not a crossed homomorphism"""
        module = trivial_module(builtin_group('C2'), Z)
        self.assertFalse(is_crossed_homomorphism(module, {0: (0,), 1: (1,)}))
        group = cohomology_group(module, 1)
        with self.assertRaises(InconsistentDataError):
            CohomologyClass(group, (0, 1))

    def test_coboundaries_are_zero_classes(self):
        """Test principal crossed homomorphisms have class 0"""
        G = builtin_group('C4')
        module = cyclic_sign_module(G, (0, 2))
        group = cohomology_group(module, 1)
        principal = apply_coboundary(module, 0, (5,))
        self.assertEqual(group.class_of(principal), (0,))
        generator = group.generators()[0]
        self.assertFalse(generator.is_zero())
        self.assertEqual(len(generator.as_function()), 4)


class CyclicOracleTest(SimpleTestCase):
    """
    Test cases for the cyclic-group oracle
    """

    def test_examples(self):
        """Test the worked oracle values"""
        self.assertEqual(cyclic_h_oracle(negation_lattice(), 1), FgAbelianGroup.cyclic(2))
        for n in (2, 3, 5):
            G = builtin_group(f'C{n}')
            self.assertEqual(cyclic_h_oracle(trivial_module(G, Z), 2), FgAbelianGroup.cyclic(n))
            for degree in (1, 2):
                self.assertTrue(cyclic_h_oracle(regular_module(G), degree).is_trivial())

    def test_non_cyclic(self):
        """Test the oracle refuses non-cyclic groups"""
        with self.assertRaises(InputError):
            cyclic_h_oracle(trivial_module(builtin_group('Q8'), Z), 1)

    def test_agreement_on_random_modules(self):
        """Test cochains and the oracle agree over cyclic groups"""
        rng = random.Random(17)
        for name in CYCLIC_GROUPS[:8]:
            G = builtin_group(name)
            for _ in range(2):
                module = random_module(G, rng)
                self.assertEqual(h1(module), cyclic_h_oracle(module, 1), module)
                self.assertEqual(h2(module), cyclic_h_oracle(module, 2), module)


class RationalVanishingTest(SimpleTestCase):
    """
    Test cases for uniquely divisible coefficients
    """

    def test_flagged_module(self):
        """Test flagged modules have vanishing H^1"""
        G = builtin_group('S3')
        flagged = GModule(G, Z, trivial_module(G, Z).action, uniquely_divisible=True)
        self.assertTrue(rational_vanishing(flagged).is_trivial())
        self.assertTrue(h1(flagged).is_trivial())

    def test_trivial_group(self):
        """Test the rule over the trivial group"""
        G = builtin_group('C1')
        flagged = GModule(G, Z, [IntMatrix.identity(1)], uniquely_divisible=True)
        self.assertTrue(rational_vanishing(flagged).is_trivial())

    def test_flag_required(self):
        """Test the rule refuses unflagged modules"""
        with self.assertRaises(InputError):
            rational_vanishing(negation_lattice())


class RestrictionInflationTest(SimpleTestCase):
    """
    Test cases for restriction and inflation
    """

    def test_restriction_to_whole_group(self):
        """Test restriction to G is an isomorphism"""
        G = builtin_group('S3')
        res = restriction(trivial_module(G, Z), G.elements, 2)
        self.assertTrue(res.is_isomorphism())

    def test_restriction_to_trivial_subgroup(self):
        """Test restriction of H^1(C2, Z(-1)) to 1 is zero"""
        res = restriction(negation_lattice(), (0,), 1)
        self.assertTrue(res.is_zero())
        self.assertTrue(res.target.group.is_trivial())

    def test_restriction_c4_to_c2(self):
        """Test H^2(C4, Z) -> H^2(C2, Z) is onto Z/2"""
        G = builtin_group('C4')
        res = restriction(trivial_module(G, Z), (0, 2), 2)
        self.assertEqual(res.source.group, FgAbelianGroup.cyclic(4))
        self.assertEqual(res.target.group, FgAbelianGroup.cyclic(2))
        self.assertTrue(res.is_surjective())

    def test_inflation_trivial_kernel(self):
        """Test inflation from G/1 is an isomorphism"""
        G = builtin_group('S3')
        L, _ = coaugmentation_quotient(G)
        self.assertTrue(inflation(L, (0,)).is_isomorphism())

    def test_inflation_from_whole_group(self):
        """Test inflation from G/G has zero source"""
        G = builtin_group('C4')
        inf = inflation(trivial_module(G, Z), G.elements)
        self.assertTrue(inf.source.group.is_trivial())

    def test_inflation_c4_through_c2(self):
        """Test H^1(C2, Z(-1)) -> H^1(C4, Z(sign)) is injective"""
        G = builtin_group('C4')
        module = cyclic_sign_module(G, (0, 2))
        inf = inflation(module, (0, 2))
        self.assertEqual(inf.source.group, FgAbelianGroup.cyclic(2))
        self.assertEqual(inf.target.group, cyclic_h_oracle(module, 1))
        self.assertTrue(inf.is_injective())

    def test_inflation_restriction_exact(self):
        """Test 0 -> H^1(G/N, M^N) -> H^1(G, M) -> H^1(N, M) is exact"""
        cases = [
            (builtin_group('C4'), (0, 2)),
            (builtin_group('S3'), (0, 3, 4)),
            (builtin_group('Q8'), (0, 1)),
        ]
        for G, N in cases:
            for module in (regular_module(G), trivial_module(G, FgAbelianGroup.cyclic(2)),
                           coaugmentation_quotient(G)[0]):
                result = inflation_restriction(module, N)
                self.assertTrue(result.inflation_injective)
                self.assertTrue(result.composite_zero)
                self.assertTrue(result.exact)

    def test_non_normal_rejected(self):
        """Test inflation needs a normal subgroup"""
        G = builtin_group('S3')
        with self.assertRaises(InconsistentDataError):
            inflation(trivial_module(G, Z), (0, 1))


class SixTermSequenceTest(SimpleTestCase):
    """
    Test cases for the six-term exact sequence
    """

    def test_coaugmentation_connecting_isomorphism(self):
        """Test H^1(L) -> H^2(Z) is an isomorphism for 0 -> Z -> ZG -> L -> 0"""
        for name in ('C2', 'C3', 'S3', 'Q8'):
            _, ses = coaugmentation_quotient(builtin_group(name))
            sequence = six_term_sequence(ses)
            self.assertTrue(sequence.is_exact(), sequence.failures())
            self.assertTrue(sequence.connecting_maps[1].is_isomorphism())

    def test_split_sequence(self):
        """Test connecting maps of a split sequence vanish"""
        G = builtin_group('C2')
        sequence = six_term_sequence(split_sequence(trivial_module(G, Z), negation_lattice()))
        self.assertTrue(sequence.is_exact())
        self.assertTrue(all(m.is_zero() for m in sequence.connecting_maps))

    def test_multiplication_by_two(self):
        """Test 0 -> Z -2-> Z -> Z/2 -> 0 over C2"""
        G = builtin_group('C2')
        sequence = six_term_sequence(multiplication_sequence(trivial_module(G, Z), 2))
        expected = [Z, Z, FgAbelianGroup.cyclic(2), FgAbelianGroup.trivial(), FgAbelianGroup.trivial(),
                    FgAbelianGroup.cyclic(2), FgAbelianGroup.cyclic(2)]
        self.assertEqual([g.group for g in sequence.groups], expected)
        self.assertTrue(sequence.is_exact())
        self.assertTrue(sequence.connecting_maps[1].is_isomorphism())

    def test_serializer(self):
        """Test the sequence renders every node"""
        _, ses = coaugmentation_quotient(builtin_group('C2'))
        data = SixTermSequenceSerializer(six_term_sequence(ses)).data
        self.assertEqual(len(data['groups']), 7)
        self.assertEqual(len(data['maps']), 6)
        self.assertTrue(data['exact'])


class ShapiroTest(SimpleTestCase):
    """
    Test cases for Shapiro's isomorphism in degree 1
    """

    def test_examples(self):
        """Test the worked Shapiro triples"""
        C2 = builtin_group('C2')
        trivial = C2.subgroup((0,))
        result = shapiro_check(C2, trivial, trivial_module(trivial.group, Z))
        self.assertTrue(result.isomorphic)
        self.assertTrue(result.h1_induced.is_trivial())

        C4 = builtin_group('C4')
        H = C4.subgroup((0, 2))
        result = shapiro_check(C4, H, trivial_module(H.group, FgAbelianGroup.cyclic(2)))
        self.assertEqual(result.h1_induced, FgAbelianGroup.cyclic(2))
        self.assertTrue(result.isomorphic)

        S3 = builtin_group('S3')
        C3 = S3.subgroup((0, 3, 4))
        result = shapiro_check(S3, C3, trivial_module(C3.group, Z))
        self.assertTrue(result.isomorphic)
        self.assertTrue(result.h1_over_subgroup.is_trivial())
