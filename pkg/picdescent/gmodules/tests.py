import random
from itertools import permutations

from django.test import SimpleTestCase

from picdescent.exceptions import (
    InconsistentActionError, InconsistentDataError, InputError, UnknownGroupError,
)
from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup

from .builtins import BUILTIN_NAMES, builtin_group
from .constructions import (
    abelianization, coaugmentation_quotient, direct_sum, fixed_points, fixed_submodule,
    induced_module, negation_lattice, permutation_module, reduce_mod, regular_module,
    restrict_module, trivial_module, twist,
)
from .models import FiniteGroup, GModule
from .sampling import random_module, random_unimodular, subgroups
from .serializers import FiniteGroupSerializer, GModuleSerializer


class FiniteGroupTest(SimpleTestCase):
    """
    Test cases for finite groups and the built-ins
    """

    def test_trivial_group(self):
        """Test C1 has one element"""
        self.assertEqual(builtin_group('C1').order, 1)
        self.assertEqual(builtin_group('cyclic(1)').generators(), ())

    def test_builtin_orders(self):
        """Test the orders of every built-in group"""
        orders = {'C2': 2, 'C3': 3, 'C4': 4, 'C6': 6, 'S3': 6, 'D4': 8, 'Q8': 8, 'S4': 24}
        for name in BUILTIN_NAMES:
            self.assertEqual(builtin_group(name).order, orders[name])

    def test_s3_is_nonabelian(self):
        """Test S3 agrees with composing permutations by hand"""
        G = builtin_group('S3')
        self.assertFalse(G.is_abelian())
        perms = list(permutations(range(3)))
        for a, s in enumerate(perms):
            for b, t in enumerate(perms):
                self.assertEqual(perms[G.mul(a, b)], tuple(s[t[x]] for x in range(3)))

    def test_q8_subgroups_all_normal(self):
        """Test every subgroup of Q8 is normal while Q8 is not abelian"""
        G = builtin_group('quaternion8')
        self.assertFalse(G.is_abelian())
        found = subgroups(G)
        self.assertEqual(len(found), 6)
        self.assertTrue(all(H.is_normal() for H in found))

    def test_dihedral_order(self):
        """Test D<n> has order 2n"""
        self.assertEqual(builtin_group('dihedral(5)').order, 10)

    def test_unknown_name(self):
        """Test unknown names raise"""
        with self.assertRaises(UnknownGroupError):
            builtin_group('M11')

    def test_invalid_table(self):
        """Test a non-associative table is rejected"""
        table = [[0, 1, 2], [1, 0, 2], [2, 2, 0]]
        with self.assertRaises(InconsistentDataError):
            FiniteGroup(table)

    def test_cosets_use_smallest_representatives(self):
        """Test left coset representatives of C2 inside C4"""
        G = builtin_group('C4')
        reps, coset_of = G.left_cosets((0, 2))
        self.assertEqual(reps, [0, 1])
        self.assertEqual(coset_of, [0, 1, 0, 1])

    def test_quotient_rejects_non_normal(self):
        """Test a non-normal subgroup cannot be factored out"""
        G = builtin_group('S3')
        with self.assertRaises(InconsistentDataError):
            G.quotient((0, 1))

    def test_subgroup_not_closed(self):
        """Test a non-closed subset is rejected"""
        with self.assertRaises(InconsistentDataError):
            builtin_group('C4').subgroup((0, 1))

    def test_cyclic_detection(self):
        """Test C6 is cyclic while Q8 and S3 are not"""
        self.assertTrue(builtin_group('C6').is_cyclic())
        self.assertFalse(builtin_group('Q8').is_cyclic())
        self.assertFalse(builtin_group('S3').is_cyclic())

    def test_commutator_subgroups(self):
        """Test [S3,S3] = A3 and [Q8,Q8] = {±1}"""
        self.assertEqual(len(builtin_group('S3').commutator_subgroup()), 3)
        self.assertEqual(builtin_group('Q8').commutator_subgroup(), (0, 1))


class ModuleConstructionTest(SimpleTestCase):
    """
    Test cases for the standard modules
    """

    def test_trivial_modules(self):
        """Test trivial modules act by the identity"""
        module = trivial_module(builtin_group('S3'), FgAbelianGroup.cyclic(4))
        self.assertTrue(module.is_trivial_action())
        zero = trivial_module(builtin_group('C3'), FgAbelianGroup.trivial())
        self.assertEqual(zero.ambient_rank, 0)

    def test_regular_c2_swaps(self):
        """Test the regular module of C2 swaps the basis"""
        module = regular_module(builtin_group('C2'))
        self.assertEqual(module.action[1].to_lists(), [[0, 1], [1, 0]])

    def test_regular_s3_is_permutation(self):
        """Test the regular module of S3 is a verified permutation module"""
        G = builtin_group('S3')
        module = regular_module(G)
        GModule(G, module.underlying, module.action)
        self.assertEqual(module.ambient_rank, 6)

    def test_coaugmentation_ranks(self):
        """Test L is free of rank |G| - 1"""
        for name in BUILTIN_NAMES + ('C1',):
            G = builtin_group(name)
            L, ses = coaugmentation_quotient(G)
            GModule(G, L.underlying, L.action)
            self.assertEqual(L.underlying, FgAbelianGroup.free(G.order - 1))
            self.assertIs(ses.C, L)

    def test_coaugmentation_c2_is_negation(self):
        """Test L over C2 is Z with the generator acting as -1"""
        L, _ = coaugmentation_quotient(builtin_group('C2'))
        self.assertEqual(L.action[1].to_lists(), [[-1]])

    def test_negation_lattice(self):
        """Test the negation lattice, its fixed points and norm"""
        module = negation_lattice(2)
        self.assertEqual([a.to_lists() for a in module.action], [[[1]], [[-1]]])
        self.assertTrue(fixed_points(module).is_trivial())
        self.assertTrue((module.action[0] + module.action[1]).is_zero())

    def test_negation_lattice_other_orders(self):
        """Test n other than 2 raises"""
        with self.assertRaises(InputError):
            negation_lattice(3)

    def test_induced_from_whole_group(self):
        """Test Ind_G^G M is M"""
        G = builtin_group('S3')
        L, _ = coaugmentation_quotient(G)
        induced = induced_module(G, G.elements, L)
        self.assertEqual(induced.underlying, L.underlying)
        self.assertEqual(induced.action, L.action)

    def test_induced_from_trivial_group(self):
        """Test Ind from the trivial subgroup of C2 is the regular module"""
        G = builtin_group('C2')
        H = G.subgroup((0,))
        induced = induced_module(G, H, trivial_module(H.group, FgAbelianGroup.free(1)))
        self.assertEqual(induced.action, regular_module(G).action)

    def test_induced_c4_from_c2(self):
        """Test Ind_C2^C4 Z/2 is (Z/2)^2 with the generator swapping"""
        G = builtin_group('C4')
        H = G.subgroup((0, 2))
        induced = induced_module(G, H, trivial_module(H.group, FgAbelianGroup.cyclic(2)))
        GModule(G, induced.underlying, induced.action)
        self.assertEqual(induced.underlying, FgAbelianGroup.from_invariants([2, 2]))
        self.assertEqual(induced.action[1].to_lists(), [[0, 1], [1, 0]])

    def test_direct_sum(self):
        """Test Z ⊕ Z(-1) over C2 acts by diag(1, -1)"""
        G = builtin_group('C2')
        module = direct_sum([trivial_module(G, FgAbelianGroup.free(1)), negation_lattice()])
        self.assertEqual(module.action[1].to_lists(), [[1, 0], [0, -1]])

    def test_direct_sum_mismatched_groups(self):
        """Test summing modules over different groups raises"""
        with self.assertRaises(InputError):
            direct_sum([regular_module(builtin_group('C2')), regular_module(builtin_group('C3'))])

    def test_fixed_points(self):
        """Test fixed points of the regular and trivial modules"""
        for name in BUILTIN_NAMES:
            G = builtin_group(name)
            self.assertEqual(fixed_points(regular_module(G)), FgAbelianGroup.free(1))
        M = FgAbelianGroup.from_invariants([2, 6], 1)
        self.assertEqual(fixed_points(trivial_module(builtin_group('S3'), M)), M)

    def test_fixed_points_commute_with_sums(self):
        """Test (M ⊕ N)^G = M^G ⊕ N^G"""
        G = builtin_group('C4')
        parts = [regular_module(G), reduce_mod(regular_module(G), 2), permutation_module(G, (0, 2))]
        summed = fixed_points(direct_sum(parts))
        separate = FgAbelianGroup.trivial()
        for part in parts:
            separate = separate.direct_sum(fixed_points(part))
        self.assertEqual(summed, separate)

    def test_abelianization(self):
        """Test abelianizations of C6, S3 and Q8"""
        self.assertEqual(abelianization(builtin_group('C6')), FgAbelianGroup.cyclic(6))
        self.assertEqual(abelianization(builtin_group('S3')), FgAbelianGroup.cyclic(2))
        self.assertEqual(abelianization(builtin_group('Q8')), FgAbelianGroup.from_invariants([2, 2]))

    def test_fixed_submodule(self):
        """Test Z[C4]^{C2} is the regular module of C4/C2"""
        G = builtin_group('C4')
        module, inclusion, projection = fixed_submodule(regular_module(G), (0, 2))
        self.assertEqual(module.group.order, 2)
        self.assertEqual(module.underlying, FgAbelianGroup.free(2))
        self.assertEqual(inclusion.shape, (4, 2))
        self.assertEqual(projection, [0, 1, 0, 1])

    def test_restriction(self):
        """Test restricting the regular module of S3 to C3"""
        G = builtin_group('S3')
        H = G.subgroup(G.closure([3]))
        restricted = restrict_module(regular_module(G), H)
        self.assertEqual(restricted.group.order, 3)
        self.assertEqual(restricted.ambient_rank, 6)

    def test_twist_preserves_structure(self):
        """Test a random basis change keeps fixed points and the underlying group"""
        rng = random.Random(3)
        G = builtin_group('S3')
        module = reduce_mod(regular_module(G), 3)
        twisted = twist(module, random_unimodular(6, rng))
        GModule(G, twisted.underlying, twisted.action)
        self.assertEqual(twisted.underlying, module.underlying)
        self.assertEqual(fixed_points(twisted), fixed_points(module))

    def test_random_modules_are_valid(self):
        """Test every sampled module passes the action checks"""
        rng = random.Random(5)
        for name in ('C2', 'C4', 'S3', 'Q8'):
            G = builtin_group(name)
            for _ in range(5):
                module = random_module(G, rng)
                self.assertLessEqual(module.ambient_rank, 4)
                GModule(G, module.underlying, module.action)


class ActionValidationTest(SimpleTestCase):
    """
    Test cases for action validation
    """

    def test_bad_action_reports_pair(self):
        """Test a non-homomorphism names the failing pair"""
        G = builtin_group('C3')
        action = [IntMatrix.identity(1), IntMatrix.from_rows([[-1]]), IntMatrix.from_rows([[-1]])]
        with self.assertRaises(InconsistentActionError) as caught:
            GModule(G, FgAbelianGroup.free(1), action)
        self.assertEqual(caught.exception.pair, (1, 1))

    def test_action_modulo_relations(self):
        """Test actions only need to agree modulo relations"""
        G = builtin_group('C2')
        # -1 and 1 agree on Z/2
        GModule(G, FgAbelianGroup.cyclic(2), [IntMatrix.from_rows([[3]]), IntMatrix.from_rows([[-1]])])

    def test_relations_must_be_preserved(self):
        """Test an action that breaks the relation lattice is rejected"""
        G = builtin_group('C2')
        underlying = FgAbelianGroup(2, [[2, 0]])
        swap = IntMatrix.from_rows([[0, 1], [1, 0]])
        with self.assertRaises(InconsistentDataError):
            GModule(G, underlying, [IntMatrix.identity(2), swap])


class SerializerTest(SimpleTestCase):
    """
    Test cases for group and module serializers
    """

    def test_group_from_table(self):
        """Test a table builds the group"""
        serializer = FiniteGroupSerializer(data={'order': 2, 'table': [[0, 1], [1, 0]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), builtin_group('C2'))

    def test_ragged_table(self):
        """Test ragged tables are rejected with the field name"""
        serializer = FiniteGroupSerializer(data={'order': 2, 'table': [[0, 1], [1]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('table', serializer.errors)

    def test_module_defaults_identity(self):
        """Test the identity matrix may be omitted"""
        G = builtin_group('C2')
        serializer = GModuleSerializer(
            data={'ambient_rank': 1, 'action': {'1': [[-1]]}}, context={'group': G}
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        module = serializer.save()
        self.assertEqual(module.action, negation_lattice().action)

    def test_module_missing_element(self):
        """Test non-identity elements need a matrix"""
        serializer = GModuleSerializer(
            data={'ambient_rank': 1, 'action': {}}, context={'group': builtin_group('C3')}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn('action', serializer.errors)
