from picdescent.cohomology.cochains import check_degree
from picdescent.cohomology.operations import cohomology
from picdescent.cli.base import ReportCommand, group_result
from picdescent.cli.loaders import MODULE_NAMES, load_group, load_module
from picdescent.gmodules.serializers import GModuleSummarySerializer


class Command(ReportCommand):
    help = 'Compute H^n(G, M) for n <= 2 and print its invariant factors'

    def add_command_arguments(self, parser):
        parser.add_argument('--group', required=True, help='Built-in group name (C4, S3, D4, Q8, S4, ...) or group JSON')
        parser.add_argument('--module', required=True, help=f'One of {", ".join(MODULE_NAMES)}, or module JSON')
        parser.add_argument('--degree', type=int, required=True, help='0, 1 or 2')

    def run(self, report, options):
        degree = options['degree']
        check_degree(degree)
        G = load_group(options['group'])
        module = load_module(options['module'], G)
        report.inputs = {'group': str(G), 'order': G.order, 'module': GModuleSummarySerializer(module).data, 'degree': degree}
        result = cohomology(module, degree)
        report.result = group_result(result)
        if degree > 0:
            report.check('annihilated_by_order', result.is_annihilated_by(G.order))
