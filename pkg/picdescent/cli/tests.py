import json
import time
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.conf import settings
from django.test import SimpleTestCase, override_settings

from picdescent.exceptions import InconsistentActionError, InputError, UnknownGroupError
from picdescent.gmodules.builtins import builtin_group

from .loaders import load_group, load_json, load_model, load_module
from .reports import RunReport, render
from .suites import run_criterion

C2_DOUBLING = '{"ambient_rank": 1, "action": {"1": [[2]]}}'


def run(*args, **options):
    """Run a command and return its parsed JSON report."""
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return json.loads(out.getvalue())


class RunReportTest(SimpleTestCase):
    """
    Test cases for run reports and their renderings
    """

    def test_exit_status(self):
        """Test exit status is 0 only when every check passes"""
        report = RunReport('demo')
        self.assertEqual(report.exit_status, 0)
        report.check('first', True)
        report.check('second', False)
        self.assertEqual(report.exit_status, 1)
        self.assertEqual(report.failures(), ['second'])

    def test_renderings_agree(self):
        """Test text output carries the same content as JSON"""
        report = RunReport('demo', {'group': 'C2'})
        report.result = {'free_rank': 0, 'invariant_factors': [2]}
        report.check('ok', True)
        data = json.loads(render(report, 'json'))
        self.assertEqual(data['command'], 'demo')
        self.assertEqual(data['result']['invariant_factors'], [2])
        text = render(report, 'text')
        self.assertIn('command: demo', text)
        self.assertIn('invariant_factors: [2]', text)
        self.assertIn('ok: true', text)

    def test_deterministic(self):
        """Test identical runs give identical reports apart from elapsed time"""
        first = run('cohomology', group='S3', module='coaugmentation', degree=1)
        second = run('cohomology', group='S3', module='coaugmentation', degree=1)
        first.pop('elapsed')
        second.pop('elapsed')
        self.assertEqual(first, second)


class LoaderTest(SimpleTestCase):
    """
    Test cases for JSON and name loaders
    """

    def test_malformed_json(self):
        """Test broken JSON reports its position"""
        with self.assertRaises(InputError) as raised:
            load_json('{"order": 2,')
        self.assertIn('line 1', str(raised.exception))

    def test_builtin_and_table(self):
        """Test a group by name and by table"""
        self.assertEqual(load_group('C2'), builtin_group('C2'))
        table = load_group('{"order": 2, "table": [[0, 1], [1, 0]]}')
        self.assertEqual(table.order, 2)
        with self.assertRaises(UnknownGroupError):
            load_group('X7')

    def test_schema_error_location(self):
        """Test schema problems name the failing field"""
        with self.assertRaises(InputError) as raised:
            load_group('{"order": 2, "table": [[0, 1]]}')
        self.assertIn('group.table', str(raised.exception))

    def test_inconsistent_action(self):
        """Test a non-homomorphic action names the failing pair"""
        with self.assertRaises(InconsistentActionError) as raised:
            load_module(C2_DOUBLING, builtin_group('C2'))
        self.assertEqual(raised.exception.pair, (1, 1))

    def test_named_modules(self):
        """Test the named modules"""
        G = builtin_group('C2')
        self.assertEqual(load_module('regular', G).ambient_rank, 2)
        self.assertEqual(load_module('negation', G).action[1].row(0), (-1,))
        with self.assertRaises(InputError):
            load_module('negation', builtin_group('C3'))

    def test_model(self):
        """Test a unit model loads with its group"""
        model = load_model(
            '{"group": "C2", "hilbert90_trivial_parts": 1,'
            ' "lattice_part": {"ambient_rank": 1, "action": {"1": [[-1]]}}}'
        )
        self.assertEqual(model.group.order, 2)
        self.assertEqual(model.module.ambient_rank, 1)


class CohomologyCommandTest(SimpleTestCase):
    """
    Test cases for the cohomology command
    """

    def test_coaugmentation(self):
        """Test H^1(S3, L) = Z/2"""
        data = run('cohomology', group='S3', module='coaugmentation', degree=1)
        self.assertEqual(data['result']['free_rank'], 0)
        self.assertEqual(data['result']['invariant_factors'], [2])
        self.assertEqual(data['exit_status'], 0)

    def test_regular(self):
        """Test H^1(C2, ZC2) = 0"""
        data = run('cohomology', group='C2', module='regular', degree=1)
        self.assertEqual(data['result']['invariant_factors'], [])
        self.assertEqual(data['result']['description'], '0')
        self.assertEqual(data['inputs']['module']['ambient_rank'], 2)

    def test_degree_zero(self):
        """Test H^0(C2, Z) = Z"""
        data = run('cohomology', group='C2', module='trivial', degree=0)
        self.assertEqual(data['result']['free_rank'], 1)

    def test_degree_capped(self):
        """Test degree 3 exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('cohomology', group='C2', module='trivial', degree=3)
        self.assertEqual(raised.exception.returncode, 2)
        self.assertIn('degree capped at 2', str(raised.exception))

    def test_unknown_group(self):
        """Test an unknown group exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('cohomology', group='X7', module='trivial', degree=1)
        self.assertEqual(raised.exception.returncode, 2)

    def test_inconsistent_action(self):
        """Test a bad action exits with status 3 and names the pair"""
        with self.assertRaises(CommandError) as raised:
            run('cohomology', group='C2', module=C2_DOUBLING, degree=1)
        self.assertEqual(raised.exception.returncode, 3)
        self.assertIn('action(1)', str(raised.exception))

    def test_coaugmentation_over_trivial_group(self):
        """Test the coaugmentation module over C1 is zero"""
        data = run('cohomology', group='C1', module='coaugmentation', degree=1)
        self.assertEqual(data['result']['description'], '0')

    def test_text_format(self):
        """Test the text rendering"""
        out = StringIO()
        call_command('cohomology', group='C4', module='trivial', degree=2, format='text', stdout=out)
        self.assertIn('description: Z/4', out.getvalue())


class DescentCommandTest(SimpleTestCase):
    """
    Test cases for the descent command
    """

    def test_circle(self):
        """Test the circle kernel is Z/2"""
        data = run('descent', example='circle')
        self.assertEqual(data['result']['invariant_factors'], [2])

    def test_group_ring_q8(self):
        """Test the Q8 group ring gives Z/2 ⊕ Z/2 matching the abelianization"""
        data = run('descent', group_ring='Q8')
        self.assertEqual(data['result']['invariant_factors'], [2, 2])
        self.assertTrue(data['checks']['matches_abelianization'])
        self.assertTrue(data['checks']['connecting_isomorphism'])

    def test_group_ring_trivial_group(self):
        """Test the trivial group gives the trivial kernel"""
        data = run('descent', group_ring='C1')
        self.assertEqual(data['result']['description'], '0')

    def test_bound(self):
        """Test a failing bound exits with status 1"""
        self.assertTrue(run('descent', example='circle', bound=2)['checks']['killed_by_2'])
        with self.assertRaises(CommandError) as raised:
            run('descent', example='circle', bound=3)
        self.assertEqual(raised.exception.returncode, 1)

    def test_finite_etale(self):
        """Test the finite étale example over F_9 gives (Z/3)^4"""
        data = run('descent', example='finite-etale', field='F_9')
        self.assertEqual(data['result']['invariant_factors'], [3, 3, 3, 3])
        self.assertTrue(data['checks']['matches_hom'])

    def test_finite_etale_needs_field(self):
        """Test the finite étale example without --field exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('descent', example='finite-etale')
        self.assertEqual(raised.exception.returncode, 2)

    def test_group_ring_s4(self):
        """Test the S4 group ring runs the connecting-map check"""
        data = run('descent', group_ring='S4')
        self.assertEqual(data['result']['invariant_factors'], [2])
        self.assertTrue(data['checks']['connecting_isomorphism'])

    def test_model(self):
        """Test a model given as JSON"""
        data = run('descent', model='{"group": "C2", "lattice_part": {"ambient_rank": 1, "action": {"1": [[-1]]}}}')
        self.assertEqual(data['result']['invariant_factors'], [2])


class ConductorCommandTest(SimpleTestCase):
    """
    Test cases for the conductor command
    """

    def test_node_over_rationals(self):
        """Test the 12-torsion of Q/Z is Z/12"""
        data = run('conductor', family='node', ring='Q', torsion=12)
        self.assertEqual(data['result']['pic']['kind'], 'q_mod_z')
        self.assertEqual(data['result']['torsion']['invariant_factors'], [12])
        self.assertTrue(data['checks']['torsion_matches_enumeration'])

    def test_node_over_dyadics(self):
        """Test the 12-torsion over Z[1/2] is Z/4"""
        data = run('conductor', family='node', ring='Z[1/2]', torsion=12)
        self.assertEqual(data['result']['torsion']['invariant_factors'], [4])
        self.assertEqual(data['result']['pic']['primes'], [2])

    def test_cusp(self):
        """Test the cusp over F_4 gives (Z/2)^2"""
        data = run('conductor', family='cusp', field='F_4')
        self.assertEqual(data['result']['group']['invariant_factors'], [2, 2])

    def test_cusp_needs_field(self):
        """Test the cusp family without a field exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('conductor', family='cusp')
        self.assertEqual(raised.exception.returncode, 2)

    def test_bad_ring(self):
        """Test Z[1/1] is refused"""
        with self.assertRaises(CommandError) as raised:
            run('conductor', family='node', ring='Z[1/1]')
        self.assertEqual(raised.exception.returncode, 2)


class InseparableCommandTest(SimpleTestCase):
    """
    Test cases for the inseparable command
    """

    def test_p3_q3(self):
        """Test three separated classes with degree-1 separators"""
        data = run('inseparable', p=3, q=3)
        self.assertEqual(data['result']['class_count'], 3)
        self.assertTrue(data['result']['identities_hold'])
        self.assertEqual([s['degree'] for s in data['result']['separations']], [1, 1, 1])

    def test_q_too_small(self):
        """Test q = 2 exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('inseparable', p=3, q=2)
        self.assertEqual(raised.exception.returncode, 2)
        self.assertIn('q > 2 required', str(raised.exception))

    def test_p5_q5(self):
        """Test five separated classes"""
        data = run('inseparable', p=5, q=5)
        self.assertEqual(data['result']['class_count'], 5)
        self.assertEqual(data['exit_status'], 0)

    @override_settings(INSEPARABLE_MAX_Q=5)
    def test_guard(self):
        """Test the size guard exits with status 4"""
        with self.assertRaises(CommandError) as raised:
            run('inseparable', p=3, q=9)
        self.assertEqual(raised.exception.returncode, 4)


class SuiteTest(SimpleTestCase):
    """
    Test cases for the acceptance suite
    """

    def test_circle_criterion(self):
        """Test a single criterion through the command"""
        data = run('suite', 'paper', only=2)
        self.assertEqual(len(data['result']['criteria']), 1)
        self.assertTrue(data['checks']['criterion_2'])

    @override_settings(SUITE_RANDOM_MATRICES=25)
    def test_smith_criterion(self):
        """Test the Smith form criterion on a small batch"""
        result = run_criterion(9, seed=1)
        self.assertEqual(result.cases, 25)
        self.assertEqual(result.failures, [])

    def test_conductor_criterion(self):
        """Test the conductor criterion covers every n, ring and cusp"""
        result = run_criterion(7, seed=1)
        self.assertEqual(result.failures, [])
        self.assertEqual(result.cases, 4 * 50 + 15)

    @override_settings(SUITE_RANDOM_MODULES=5)
    def test_seeded_runs_repeat(self):
        """Test the same seed draws the same modules"""
        first = run('suite', 'paper', only=4, seed=7)
        second = run('suite', 'paper', only=4, seed=7)
        self.assertEqual(first['result']['criteria'][0]['cases'], 10)
        self.assertEqual(first['checks'], second['checks'])

    def test_suite_option_form(self):
        """Test --suite paper runs the same battery as the positional name"""
        data = run('suite', suite_option='paper', only=2)
        self.assertEqual(data['inputs']['suite'], 'paper')
        self.assertTrue(data['checks']['criterion_2'])

    def test_suite_name_required(self):
        """Test a missing suite name exits with status 2"""
        with self.assertRaises(CommandError) as raised:
            run('suite', only=2)
        self.assertEqual(raised.exception.returncode, 2)

    def test_full_suite_within_time_bound(self):
        """Test suite paper at full sample sizes passes in under five minutes"""
        start = time.perf_counter()
        data = run('suite', 'paper')
        self.assertLess(time.perf_counter() - start, 300)
        self.assertEqual(data['exit_status'], 0)
        self.assertEqual([c['number'] for c in data['result']['criteria']], list(range(1, 10)))
        by_number = {c['number']: c for c in data['result']['criteria']}
        self.assertEqual(by_number[4]['cases'], 2 * settings.SUITE_RANDOM_MODULES)
        self.assertEqual(by_number[5]['cases'], 2 * settings.SUITE_RANDOM_MODULES)
        self.assertGreaterEqual(settings.SUITE_RANDOM_MODULES, 100)

    def test_unknown_criterion(self):
        """Test run_criterion refuses unknown numbers"""
        with self.assertRaises(InputError):
            run_criterion(11, seed=1)

