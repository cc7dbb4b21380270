from picdescent.cli.base import ReportCommand
from picdescent.cli.loaders import validated
from picdescent.inseparable.derivations import class_census, w_identity_checks
from picdescent.inseparable.serializers import InseparableParametersSerializer, InseparableReportSerializer


class Command(ReportCommand):
    help = 'Check the W identities and separate the classes M(a)^r at (p, q)'

    def add_command_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True, help='The characteristic')
        parser.add_argument('--q', type=int, required=True, help='A power of p above 2')

    def run(self, report, options):
        params = validated(
            InseparableParametersSerializer,
            {'p': options['p'], 'q': options['q']},
            location='parameters',
            build=False,
        )
        p, q = params['p'], params['q']
        report.inputs = {'p': p, 'q': q}
        identities = w_identity_checks(p, q)
        census = class_census(p, q)
        report.result = InseparableReportSerializer({
            'p': p,
            'q': q,
            'identities': identities,
            'separations': census.separations,
            'class_count': census.class_count,
        }).data
        report.check('identities_hold', all(identities.values()))
        r = q // p
        report.check('separator_degrees', all(s.z_degree == r * (q - 2) for s in census.separations))
        report.check('class_count', census.class_count == p)
