import random
from itertools import product

from django.test import SimpleTestCase

from picdescent.exceptions import InconsistentDataError, InputError

from .homomorphisms import GroupHomomorphism, exact_at, kernel_mod_image, subgroup_presentation
from .matrices import IntMatrix
from .models import FgAbelianGroup, group_from_relations, quotient, torsion_subgroup
from .normal_forms import (
    LinearSystem, determinant, determinantal_divisor, invariant_factors, smith_normal_form, torsion_factors_mod,
)
from .serializers import FgAbelianGroupSerializer, PresentationSerializer


class IntMatrixTest(SimpleTestCase):
    """
    Test cases for IntMatrix
    """

    def test_product_is_exact(self):
        """Test products never overflow"""
        big = 10 ** 40
        m = IntMatrix.from_rows([[big, 1], [0, big]])
        square = m @ m
        self.assertEqual(square.to_lists(), [[big * big, 2 * big], [0, big * big]])

    def test_ragged_rows_rejected(self):
        """Test ragged input raises"""
        with self.assertRaises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_transpose_and_apply(self):
        """Test transpose and matrix-vector product"""
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(m.apply((1, 0, -1)), (-2, -2))
        self.assertEqual(m.transpose().to_lists(), [[1, 4], [2, 5], [3, 6]])

    def test_block_diagonal(self):
        """Test block diagonal assembly"""
        m = IntMatrix.block_diagonal([IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[1, 1]])])
        self.assertEqual(m.to_lists(), [[2, 0, 0], [0, 1, 1]])


class SmithNormalFormTest(SimpleTestCase):
    """
    Test cases for the Smith normal form
    """

    def assertSmith(self, m):
        U, D, V = smith_normal_form(m)
        self.assertEqual(U @ m @ V, D)
        self.assertIn(determinant(U), (1, -1))
        self.assertIn(determinant(V), (1, -1))
        diagonal = [D[i, i] for i in range(min(D.rows, D.cols))]
        for i in range(D.rows):
            for j in range(D.cols):
                if i != j:
                    self.assertEqual(D[i, j], 0)
        self.assertTrue(all(d >= 0 for d in diagonal))
        for smaller, larger in zip(diagonal, diagonal[1:]):
            if smaller:
                self.assertEqual(larger % smaller, 0)
            else:
                self.assertEqual(larger, 0)
        return diagonal

    def test_zero_matrix(self):
        """Test zero matrix stays zero"""
        self.assertEqual(self.assertSmith(IntMatrix.zeros(2, 2)), [0, 0])

    def test_diag_2_3(self):
        """Test diag(2,3) becomes diag(1,6)"""
        self.assertEqual(self.assertSmith(IntMatrix.diagonal([2, 3])), [1, 6])

    def test_2x2_example(self):
        """Test [[2,4],[6,8]] becomes diag(2,4)"""
        self.assertEqual(self.assertSmith(IntMatrix.from_rows([[2, 4], [6, 8]])), [2, 4])

    def test_rectangular(self):
        """Test a non-square matrix"""
        m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16], [0, 0, 0]])
        self.assertEqual(self.assertSmith(m), [2, 6, 12])

    def test_random_matrices_against_determinantal_divisors(self):
        """Test d1·...·dk equals the gcd of k x k minors"""
        rng = random.Random(7)
        for _ in range(40):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)], cols
            )
            diagonal = self.assertSmith(m)
            running = 1
            for k in range(1, min(rows, cols) + 1):
                running *= diagonal[k - 1]
                self.assertEqual(determinantal_divisor(m, k), running)

    def test_invariant_factors_match_dense_diagonal(self):
        """Test the transform-free engine agrees with the dense one"""
        rng = random.Random(11)
        for _ in range(40):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.choice([0, 0, 1, -1, 2, 3, -4]) for _ in range(cols)] for _ in range(rows)], cols
            )
            _, D, _ = smith_normal_form(m)
            dense = sorted(D[i, i] for i in range(min(rows, cols)) if D[i, i])
            self.assertEqual(invariant_factors(m), dense)

    def test_torsion_factors_mod_match_dense_diagonal(self):
        """Test elimination modulo twice the largest factor keeps every factor above 1"""
        rng = random.Random(12)
        for _ in range(40):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.choice([0, 0, 1, -1, 2, 3, -4, 6]) for _ in range(cols)] for _ in range(rows)], cols
            )
            _, D, _ = smith_normal_form(m)
            dense = [D[i, i] for i in range(min(rows, cols)) if D[i, i]]
            modulus = 2 * max(dense, default=1)
            self.assertEqual(torsion_factors_mod(m, modulus), [d for d in dense if d > 1])

    def test_torsion_factors_mod_reads_zero(self):
        """Test diag(2, 3, 0) modulo 12 gives [6]"""
        m = IntMatrix.diagonal([2, 3, 0])
        self.assertEqual(torsion_factors_mod(m, 12), [6])


class LinearSystemTest(SimpleTestCase):
    """
    Test cases for kernels and integer solving
    """

    def test_kernel_of_sum_map(self):
        """Test ker(Z^2 -> Z, sum) is spanned by (1,-1)"""
        kernel = LinearSystem(IntMatrix.from_rows([[1, 1]])).kernel_basis()
        self.assertEqual(len(kernel), 1)
        self.assertIn(kernel[0], [(1, -1), (-1, 1)])

    def test_solve_detects_divisibility(self):
        """Test solving 2x = 3 fails and 2x = 4 succeeds"""
        system = LinearSystem(IntMatrix.from_rows([[2]]))
        self.assertIsNone(system.solve((3,)))
        self.assertEqual(system.solve((4,)), (2,))

    def test_solution_is_verified(self):
        """Test solutions satisfy the system"""
        m = IntMatrix.from_rows([[3, 5, 0], [1, 2, 7]])
        x = LinearSystem(m).solve((1, 1))
        self.assertEqual(m.apply(x), (1, 1))


class FgAbelianGroupTest(SimpleTestCase):
    """
    Test cases for presented abelian groups
    """

    def test_cyclic_two(self):
        """Test rank 1 modulo 2 is Z/2"""
        group = group_from_relations(1, [[2]])
        self.assertEqual(group.invariant_factors, (2,))
        self.assertEqual(group.free_rank, 0)

    def test_z6(self):
        """Test Z/2 ⊕ Z/3 is Z/6"""
        self.assertEqual(group_from_relations(2, [[2, 0], [0, 3]]), FgAbelianGroup.cyclic(6))

    def test_free(self):
        """Test no relations gives Z^2"""
        group = group_from_relations(2, None)
        self.assertEqual((group.invariant_factors, group.free_rank), ((), 2))
        self.assertEqual(str(group), 'Z^2')

    def test_trivial_is_identity_for_sums(self):
        """Test G ⊕ 0 equals G"""
        group = FgAbelianGroup.from_invariants([2, 4], 1)
        self.assertEqual(group.direct_sum(FgAbelianGroup.trivial()), group)
        self.assertEqual(str(FgAbelianGroup.trivial()), '0')

    def test_equality_modulo_relations(self):
        """Test elements compare modulo the relation lattice"""
        group = group_from_relations(2, [[2, 4], [6, 8]])
        self.assertTrue(group.equal((1, 0), (3, 4)))
        self.assertTrue(group.contains((2, 4)))
        self.assertFalse(group.contains((1, 0)))

    def test_lift_inverts_normal_form(self):
        """Test lift followed by normal_form is the identity"""
        group = group_from_relations(3, [[2, 4, 0], [6, 8, 0]])
        for canonical in [(1, 0, 5), (0, 3, -2), (1, 2, 0)]:
            self.assertEqual(group.normal_form(group.lift(canonical)), canonical)

    def test_order_and_exponent(self):
        """Test order and exponent of Z/2 ⊕ Z/4"""
        group = FgAbelianGroup.from_invariants([2, 4])
        self.assertEqual(group.order(), 8)
        self.assertEqual(group.exponent(), 4)
        self.assertIsNone(FgAbelianGroup.free(1).order())

    def test_wrong_relation_width(self):
        """Test relations with the wrong width raise"""
        with self.assertRaises(InputError):
            FgAbelianGroup(2, [[1, 2, 3]])

    def test_element_order_census(self):
        """Test invariants agree with element-order counts for every small chain"""
        for factors in [(2,), (6,), (2, 2), (2, 4), (3, 9), (2, 6, 12), (4, 4), (2, 2, 2, 10)]:
            group = group_from_relations(len(factors), IntMatrix.diagonal(factors))
            # scramble the presentation by a unimodular change of basis
            n = len(factors)
            P = IntMatrix.from_rows([[1 if i == j else (1 if j == i + 1 else 0) for j in range(n)]
                                     for i in range(n)])
            scrambled = FgAbelianGroup(n, group.relations @ P)
            self.assertEqual(scrambled, group)
            counts = {}
            for element in product(*(range(d) for d in factors)):
                n_ = 1
                while any((n_ * x) % d for x, d in zip(element, factors)):
                    n_ += 1
                counts[n_] = counts.get(n_, 0) + 1
            for k in set(counts):
                killed = sum(c for o, c in counts.items() if k % o == 0)
                self.assertEqual(torsion_subgroup(scrambled, k).order(), killed)


class QuotientTest(SimpleTestCase):
    """
    Test cases for quotients and torsion subgroups
    """

    def test_quotients(self):
        """Test the three worked quotients"""
        self.assertEqual(quotient(FgAbelianGroup.free(2), [(1, 0)]), FgAbelianGroup.free(1))
        self.assertEqual(quotient(FgAbelianGroup.free(1), [(2,)]), FgAbelianGroup.cyclic(2))
        self.assertEqual(quotient(FgAbelianGroup.free(2), [(2, 4), (6, 8)]),
                         FgAbelianGroup.from_invariants([2, 4]))

    def test_redundant_generators(self):
        """Test adding redundant generators leaves the quotient unchanged"""
        base = quotient(FgAbelianGroup.free(2), [(2, 4), (6, 8)])
        padded = quotient(FgAbelianGroup.free(2), [(2, 4), (6, 8), (8, 12), (0, 0), (-2, -4)])
        self.assertEqual(base, padded)

    def test_torsion_subgroups(self):
        """Test the worked torsion subgroups"""
        self.assertEqual(torsion_subgroup(FgAbelianGroup.cyclic(6), 4), FgAbelianGroup.cyclic(2))
        self.assertTrue(torsion_subgroup(FgAbelianGroup.free(3), 5).is_trivial())
        self.assertEqual(torsion_subgroup(FgAbelianGroup.from_invariants([2, 9]), 6),
                         FgAbelianGroup.from_invariants([2, 3]))

    def test_torsion_monotone(self):
        """Test _aG sits inside _bG when a divides b"""
        group = FgAbelianGroup.from_invariants([2, 12, 36])
        for a, b in [(1, 2), (2, 4), (3, 12), (4, 36)]:
            small, large = torsion_subgroup(group, a), torsion_subgroup(group, b)
            self.assertEqual(large.order() % small.order(), 0)

    def test_torsion_rejects_zero(self):
        """Test n < 1 raises"""
        with self.assertRaises(InputError):
            torsion_subgroup(FgAbelianGroup.cyclic(2), 0)


class KernelModImageTest(SimpleTestCase):
    """
    Test cases for kernel_mod_image and homomorphisms
    """

    def test_zero_map_mod_doubling(self):
        """Test ker(0)/2Z is Z/2"""
        result = kernel_mod_image(IntMatrix.zeros(1, 1), IntMatrix.from_rows([[2]]), [])
        self.assertEqual(result, FgAbelianGroup.cyclic(2))

    def test_injective_map(self):
        """Test ker(×2) is trivial"""
        result = kernel_mod_image(IntMatrix.from_rows([[2]]), IntMatrix.zeros(1, 1), [])
        self.assertTrue(result.is_trivial())

    def test_sum_map(self):
        """Test ker(sum)/<(1,-1)> is trivial"""
        f = IntMatrix.from_rows([[1, 1]])
        g = IntMatrix.from_rows([[1], [-1]])
        self.assertTrue(kernel_mod_image(f, g, []).is_trivial())

    def test_relations_in_target(self):
        """Test kernels are taken modulo target relations"""
        # Z -> Z/4 by ×2 has kernel 2Z, so ker/4Z is Z/2
        result = kernel_mod_image(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[4]]), [(4,)])
        self.assertEqual(result, FgAbelianGroup.cyclic(2))

    def test_nonzero_composite_rejected(self):
        """Test f∘g != 0 raises"""
        with self.assertRaises(InconsistentDataError):
            kernel_mod_image(IntMatrix.identity(1), IntMatrix.identity(1), [])

    def test_homomorphism_kernel_and_cokernel(self):
        """Test Z/4 -> Z/4 by ×2"""
        z4 = FgAbelianGroup.cyclic(4)
        double = GroupHomomorphism(z4, z4, IntMatrix.from_rows([[2]]))
        self.assertEqual(double.kernel(), FgAbelianGroup.cyclic(2))
        self.assertEqual(double.image(), FgAbelianGroup.cyclic(2))
        self.assertEqual(double.cokernel(), FgAbelianGroup.cyclic(2))
        self.assertFalse(double.is_injective())

    def test_ill_defined_map_rejected(self):
        """Test Z/2 -> Z/3 by the identity is rejected"""
        with self.assertRaises(InconsistentDataError):
            GroupHomomorphism(FgAbelianGroup.cyclic(2), FgAbelianGroup.cyclic(3), IntMatrix.identity(1))

    def test_exactness(self):
        """Test 0 -> Z -×2-> Z -> Z/2 -> 0 is exact in the middle"""
        z = FgAbelianGroup.free(1)
        double = GroupHomomorphism(z, z, IntMatrix.from_rows([[2]]))
        reduce = GroupHomomorphism(z, FgAbelianGroup.cyclic(2), IntMatrix.identity(1))
        self.assertTrue(exact_at(double, reduce))
        triple = GroupHomomorphism(z, z, IntMatrix.from_rows([[3]]))
        self.assertFalse(exact_at(triple, reduce))

    def test_subgroup_presentation(self):
        """Test the subgroup generated by 2 in Z/12"""
        self.assertEqual(subgroup_presentation([(2,)], FgAbelianGroup.cyclic(12)), FgAbelianGroup.cyclic(6))


class SerializerTest(SimpleTestCase):
    """
    Test cases for zlattice serializers
    """

    def test_group_rendering(self):
        """Test the JSON shape of a group"""
        data = FgAbelianGroupSerializer(FgAbelianGroup.from_invariants([2, 4], 1)).data
        self.assertEqual(dict(data), {'free_rank': 1, 'invariant_factors': [2, 4]})

    def test_broken_chain_rejected(self):
        """Test invariant factors must divide each other"""
        serializer = FgAbelianGroupSerializer(data={'free_rank': 0, 'invariant_factors': [4, 6]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('invariant_factors', serializer.errors)

    def test_presentation(self):
        """Test a presentation builds the right group"""
        serializer = PresentationSerializer(data={'ambient_rank': 2, 'relations': [[2, 0], [0, 3]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), FgAbelianGroup.cyclic(6))
