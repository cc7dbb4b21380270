from django.conf import settings

from picdescent.cli.base import ReportCommand
from picdescent.cli.suites import CRITERIA, SUITE_CHOICES, run_suite
from picdescent.exceptions import InputError

SUITE_NAMES = [value for value, _ in SUITE_CHOICES]


class Command(ReportCommand):
    help = 'Run an acceptance suite; `suite paper` and `suite --suite paper` run every criterion'

    def add_command_arguments(self, parser):
        parser.add_argument('name', nargs='?', choices=SUITE_NAMES, help='Suite to run')
        parser.add_argument('--suite', dest='suite_option', choices=SUITE_NAMES, help='Same as the positional name')
        parser.add_argument('--only', type=int, choices=sorted(CRITERIA), help='Run a single criterion')
        parser.add_argument('--seed', type=int, help='Override SUITE_RANDOM_SEED')

    def run(self, report, options):
        name, option = options['name'], options['suite_option']
        if name and option and name != option:
            raise InputError(f'conflicting suites {name!r} and {option!r}')
        name = name or option
        if not name:
            raise InputError(f'name a suite: one of {", ".join(SUITE_NAMES)}')
        seed = settings.SUITE_RANDOM_SEED if options['seed'] is None else options['seed']
        report.inputs = {'suite': name, 'only': options['only'], 'seed': seed}
        results = run_suite(name, only=options['only'], seed=seed)
        report.result = {
            'criteria': [
                {
                    'number': result.number,
                    'name': result.name,
                    'cases': result.cases,
                    'failures': result.failures,
                    'elapsed': round(result.elapsed, 4),
                }
                for result in results
            ],
        }
        for result in results:
            report.check(f'criterion_{result.number}', not result.failures)
