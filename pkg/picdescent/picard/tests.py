from fractions import Fraction

from django.test import SimpleTestCase

from picdescent.exceptions import InconsistentDataError, InputError
from picdescent.gmodules.builtins import BUILTIN_NAMES, builtin_group
from picdescent.gmodules.constructions import negation_lattice, regular_module, trivial_module
from picdescent.zlattice.models import FgAbelianGroup

from .conductor import (
    Cusp, DualNumber, FiniteField, LocalizedIntegers, NodeLikeUnitQuotient, RationalField,
    conductor_square_pic, fraction_torsion_oracle, parse_field, parse_ring, pic_torsion,
)
from .descent import (
    circle_model, cusp_open_cover_kernel, descent_kernel, finite_etale_kernel, finite_etale_model, group_ring_model,
    group_ring_pic, kernel_torsion_bound_check, ramification_kernel, truncated_torsion_census, truncated_units,
)
from .models import (
    AdditiveGroupOfField, FinitePic, PrimaryDivisibleSum, RationalsModZ, UnitModel, is_torsion_monotone,
)
from .serializers import PicDescriptionSerializer, UnitModelSerializer

Z = FgAbelianGroup.free(1)


class UnitModelTest(SimpleTestCase):
    """
    Test cases for unit models and descent kernels
    """

    def test_circle(self):
        """Test the circle has descent kernel of order two"""
        self.assertEqual(descent_kernel(circle_model()), FgAbelianGroup.cyclic(2))

    def test_field_parts_only(self):
        """Test a model made of field units has trivial kernel"""
        model = UnitModel(builtin_group('S3'), hilbert90_trivial_parts=2)
        self.assertTrue(descent_kernel(model).is_trivial())

    def test_trivial_lattice(self):
        """Test C2 acting trivially on Z gives Hom(C2, Z) = 0"""
        G = builtin_group('C2')
        model = UnitModel(G, lattice_part=trivial_module(G, Z))
        self.assertTrue(descent_kernel(model).is_trivial())

    def test_lattice_and_finite_parts(self):
        """Test both visible parts add up"""
        G = builtin_group('C2')
        model = UnitModel(G, 1, lattice_part=negation_lattice(),
                          finite_part=trivial_module(G, FgAbelianGroup.cyclic(2)))
        self.assertEqual(descent_kernel(model), FgAbelianGroup.from_invariants([2, 2]))

    def test_part_validation(self):
        """Test parts of the wrong shape are rejected"""
        G = builtin_group('C2')
        with self.assertRaises(InconsistentDataError):
            UnitModel(G, lattice_part=trivial_module(G, FgAbelianGroup.cyclic(2)))
        with self.assertRaises(InconsistentDataError):
            UnitModel(G, finite_part=trivial_module(G, Z))
        with self.assertRaises(InconsistentDataError):
            UnitModel(G, lattice_part=regular_module(builtin_group('C3')))
        with self.assertRaises(InputError):
            UnitModel(G, hilbert90_trivial_parts=-1)

    def test_torsion_bound(self):
        """Test |G| kills the descent kernel"""
        self.assertTrue(kernel_torsion_bound_check(circle_model(), 2))
        self.assertFalse(kernel_torsion_bound_check(circle_model(), 3))
        self.assertTrue(kernel_torsion_bound_check(group_ring_model(builtin_group('S3')), 6))
        for name in ('C4', 'D4', 'Q8'):
            G = builtin_group(name)
            self.assertTrue(kernel_torsion_bound_check(group_ring_model(G), G.order))


class GroupRingPicTest(SimpleTestCase):
    """
    Test cases for Pic of the descended group ring
    """

    def test_examples(self):
        """Test C2, S3 and Q8"""
        result = group_ring_pic(builtin_group('C2'))
        self.assertEqual(result.pic, FgAbelianGroup.cyclic(2))
        self.assertTrue(result.matches_abelianization)
        result = group_ring_pic(builtin_group('S3'))
        self.assertEqual(result.pic, FgAbelianGroup.cyclic(2))
        self.assertTrue(result.connecting_isomorphism)
        result = group_ring_pic(builtin_group('Q8'))
        self.assertEqual(result.pic, FgAbelianGroup.from_invariants([2, 2]))
        self.assertTrue(result.matches_abelianization)

    def test_trivial_group(self):
        """Test the trivial group gives trivial Pic"""
        result = group_ring_pic(builtin_group('C1'))
        self.assertTrue(result.pic.is_trivial())
        self.assertTrue(result.matches_abelianization)

    def test_builtins_match_abelianization(self):
        """Test Pic is G/[G, G] and H^2(G, Z) for every built-in group"""
        for name in BUILTIN_NAMES:
            result = group_ring_pic(builtin_group(name))
            self.assertTrue(result.matches_abelianization, name)
            self.assertTrue(result.second_cohomology, name)
            self.assertTrue(result.connecting_isomorphism, name)

    def test_s4_connecting_map(self):
        """Test S4 through the six-term sequence gives Z/2"""
        result = group_ring_pic(builtin_group('S4'))
        self.assertEqual(result.pic, FgAbelianGroup.cyclic(2))
        self.assertTrue(result.connecting_isomorphism)


class CoverExamplesTest(SimpleTestCase):
    """
    Test cases for the finite étale, open cover and ramified examples
    """

    def test_truncated_units(self):
        """Test (F_4[ε]/(ε²))* = Z/3 ⊕ (Z/2)²"""
        self.assertEqual(truncated_units(FiniteField(4)), FgAbelianGroup.from_invariants([2, 6]))
        self.assertEqual(truncated_units(FiniteField(3)).order(), 2 * 3 ** 2)

    def test_finite_etale_kernel(self):
        """Test the kernel is Hom(Z/p, R*) = (Z/p)^(e(p-1))"""
        for q, expected in ((2, [2]), (4, [2, 2]), (3, [3, 3]), (9, [3] * 4), (5, [5] * 4)):
            kernel, hom = finite_etale_kernel(FiniteField(q))
            self.assertEqual(kernel, FgAbelianGroup.from_invariants(expected), q)
            self.assertEqual(kernel, hom, q)

    def test_finite_etale_matches_enumeration(self):
        """Test the p-torsion of F_p[ε]/(ε^p) counted by brute force"""
        for p in (2, 3, 5):
            kernel, _ = finite_etale_kernel(FiniteField(p))
            self.assertEqual(truncated_torsion_census(p), kernel.order(), p)

    def test_finite_etale_needs_positive_characteristic(self):
        """Test Q is refused"""
        with self.assertRaises(InputError):
            finite_etale_model(RationalField())

    def test_cusp_open_cover(self):
        """Test the open cover of the cusp has kernel k"""
        self.assertEqual(cusp_open_cover_kernel(FiniteField(8)).finite_group(), FgAbelianGroup.from_invariants([2] * 3))
        self.assertFalse(cusp_open_cover_kernel(RationalField()).is_finite())

    def test_ramification(self):
        """Test H^1(G, B*) has order e"""
        self.assertTrue(ramification_kernel(1).is_trivial())
        self.assertEqual(ramification_kernel(6), FgAbelianGroup.cyclic(6))
        with self.assertRaises(InputError):
            ramification_kernel(0)


class PicDescriptionTest(SimpleTestCase):
    """
    Test cases for n-torsion of Picard groups
    """

    def test_rationals_mod_z(self):
        """Test _12(Q/Z) = Z/12"""
        self.assertEqual(pic_torsion(RationalsModZ(), 12), FgAbelianGroup.cyclic(12))
        self.assertFalse(RationalsModZ().is_finite())
        self.assertIsNone(RationalsModZ().exponent())

    def test_primary_divisible(self):
        """Test _12 of the dyadic part is Z/4"""
        self.assertEqual(pic_torsion(PrimaryDivisibleSum({2}), 12), FgAbelianGroup.cyclic(4))
        self.assertTrue(pic_torsion(PrimaryDivisibleSum({2, 3}), 35).is_trivial())
        self.assertEqual(pic_torsion(PrimaryDivisibleSum({3}), 27), FgAbelianGroup.cyclic(27))

    def test_additive_group(self):
        """Test torsion of (Q, +) and (F_9, +)"""
        self.assertTrue(pic_torsion(AdditiveGroupOfField(0), 7).is_trivial())
        field = AdditiveGroupOfField(3, 2)
        self.assertEqual(pic_torsion(field, 6), FgAbelianGroup.from_invariants([3, 3]))
        self.assertTrue(pic_torsion(field, 4).is_trivial())
        self.assertEqual(field.exponent(), 3)

    def test_finite(self):
        """Test torsion of a finite Picard group"""
        pic = FinitePic(FgAbelianGroup.from_invariants([2, 4]))
        self.assertEqual(pic.torsion(2), FgAbelianGroup.from_invariants([2, 2]))
        with self.assertRaises(InputError):
            FinitePic(Z)

    def test_bad_index(self):
        """Test n must be positive"""
        with self.assertRaises(InputError):
            RationalsModZ().torsion(0)

    def test_monotone(self):
        """Test _a embeds in _b when a divides b"""
        descriptions = [RationalsModZ(), PrimaryDivisibleSum({2, 5}), AdditiveGroupOfField(2, 3),
                        FinitePic(FgAbelianGroup.from_invariants([2, 6, 12]))]
        for description in descriptions:
            for b in range(1, 41):
                for a in range(1, b + 1):
                    if b % a == 0:
                        self.assertTrue(is_torsion_monotone(description, a, b), (description, a, b))


class ConductorSquareTest(SimpleTestCase):
    """
    Test cases for the conductor-square families
    """

    def test_cusp(self):
        """Test the cusp over F_9 and F_4 gives the additive group"""
        pic = conductor_square_pic(Cusp('F_9'))
        self.assertEqual(pic.finite_group(), FgAbelianGroup.from_invariants([3, 3]))
        self.assertEqual(conductor_square_pic(Cusp('F_4')).finite_group(), FgAbelianGroup.from_invariants([2, 2]))
        self.assertEqual(conductor_square_pic(Cusp('Q')), AdditiveGroupOfField(0))

    def test_cusp_exponent(self):
        """Test order p^e and exponent p for every small finite field"""
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27):
            field = FiniteField(q)
            pic = conductor_square_pic(Cusp(field))
            self.assertEqual(pic.finite_group().order(), q)
            self.assertEqual(pic.exponent(), field.characteristic)
            self.assertEqual(Cusp(field).residue_unit_count() // (q - 1), q)

    def test_node(self):
        """Test the node family gives Q/Z and the primary sums"""
        self.assertEqual(conductor_square_pic(NodeLikeUnitQuotient('Q')), RationalsModZ())
        self.assertEqual(conductor_square_pic(NodeLikeUnitQuotient('Z[1/6]')), PrimaryDivisibleSum({2, 3}))

    def test_node_torsion_against_oracle(self):
        """Test n-torsion against enumerated fractions"""
        pic = conductor_square_pic(NodeLikeUnitQuotient('Q'))
        for n in range(1, 51):
            census = fraction_torsion_oracle(None, n)
            self.assertEqual(pic.torsion(n), FgAbelianGroup.cyclic(census.size))
            self.assertTrue(census.cyclic)
        for m in (2, 6, 30):
            pic = conductor_square_pic(NodeLikeUnitQuotient(LocalizedIntegers(m)))
            for n in range(1, 51):
                census = fraction_torsion_oracle(m, n)
                self.assertEqual(pic.torsion(n).order(), census.size, (m, n))
                self.assertTrue(census.cyclic)

    def test_coprime_and_prime_power(self):
        """Test torsion vanishes off m and is full on powers of a prime m"""
        pic = conductor_square_pic(NodeLikeUnitQuotient('Z[1/5]'))
        self.assertTrue(pic.torsion(12).is_trivial())
        self.assertEqual(pic.torsion(125), FgAbelianGroup.cyclic(125))

    def test_dual_numbers(self):
        """Test (1 + t)^j = 1 + j·t and inverses in D[t]/(t²)"""
        for j in range(-5, 6):
            self.assertEqual(DualNumber(1, 1) ** j, DualNumber(1, j))
        u = DualNumber(Fraction(2, 3), 5)
        self.assertEqual(u * u.inverse(), DualNumber(1))
        with self.assertRaises(InconsistentDataError):
            DualNumber(0, 1).inverse()

    def test_pic_class(self):
        """Test classes of residue units"""
        spec = NodeLikeUnitQuotient('Z[1/2]')
        self.assertTrue(spec.check_unit_images())
        self.assertEqual(spec.pic_class(DualNumber(2, 3)), Fraction(1, 2))
        self.assertEqual(spec.pic_class(spec.unit_image(4, u=-2)), 0)
        with self.assertRaises(InputError):
            spec.pic_class(DualNumber(3, 1))

    def test_parsing(self):
        """Test field and ring names"""
        self.assertEqual(parse_field('F_27'), FiniteField(27))
        self.assertEqual(parse_field('Q'), RationalField())
        self.assertEqual(parse_ring('Z[1/30]'), LocalizedIntegers(30))
        for bad in ('F_6', 'R'):
            with self.assertRaises(InputError):
                parse_field(bad)
        with self.assertRaises(InputError):
            parse_ring('Z[1/1]')
        with self.assertRaises(InputError):
            Cusp(LocalizedIntegers(2))


class SerializerTest(SimpleTestCase):
    """
    Test cases for Picard serializers
    """

    def test_render(self):
        """Test every description kind renders"""
        data = PicDescriptionSerializer(PrimaryDivisibleSum({3, 2})).data
        self.assertEqual(data['kind'], 'primary_divisible')
        self.assertEqual(data['primes'], [2, 3])
        self.assertIsNone(data['exponent'])
        data = PicDescriptionSerializer(AdditiveGroupOfField(3, 2)).data
        self.assertEqual((data['characteristic'], data['degree'], data['exponent']), (3, 2, 3))

    def test_parse(self):
        """Test descriptions are built from JSON"""
        serializer = PicDescriptionSerializer(data={'kind': 'finite',
                                                    'group': {'free_rank': 0, 'invariant_factors': [2, 4]}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), FinitePic(FgAbelianGroup.from_invariants([2, 4])))
        serializer = PicDescriptionSerializer(data={'kind': 'primary_divisible'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('primes', serializer.errors)

    def test_unit_model(self):
        """Test a circle-shaped unit model read from JSON"""
        G = builtin_group('C2')
        serializer = UnitModelSerializer(data={
            'hilbert90_trivial_parts': 1,
            'lattice_part': {'ambient_rank': 1, 'action': {'1': [[-1]]}},
        }, context={'group': G})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(descent_kernel(serializer.save()), FgAbelianGroup.cyclic(2))
