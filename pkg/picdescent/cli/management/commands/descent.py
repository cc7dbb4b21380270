from picdescent.cohomology.operations import hom_from_group
from picdescent.cli.base import ReportCommand, group_result
from picdescent.cli.loaders import load_group, load_model
from picdescent.exceptions import InputError
from picdescent.picard.conductor import parse_field
from picdescent.picard.descent import (
    circle_model, descent_kernel, finite_etale_model, group_ring_model, group_ring_pic, kernel_torsion_bound_check,
    truncated_units,
)

EXAMPLES = ('circle', 'finite-etale')


class Command(ReportCommand):
    help = 'Compute the descent kernel Ker[Pic(A) -> Pic(B)] of a Galois cover'

    def add_command_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--example', choices=EXAMPLES, help='A built-in unit model')
        source.add_argument('--group-ring', metavar='GROUP', help='The group-ring descent over a built-in group')
        source.add_argument('--model', help='Unit model JSON with a "group" entry')
        parser.add_argument('--field', help='Coefficient field F_q of the finite-etale example')
        parser.add_argument('--bound', type=int, help='Also check that this integer kills the kernel')

    def run(self, report, options):
        if options['example'] == 'circle':
            model = circle_model()
            report.inputs = {'example': 'circle', 'group': str(model.group)}
            report.result = group_result(descent_kernel(model))
        elif options['example']:
            if not options['field']:
                raise InputError('the finite-etale example needs --field')
            field = parse_field(options['field'])
            model = finite_etale_model(field)
            report.inputs = {'example': 'finite-etale', 'field': field.name, 'group': str(model.group)}
            kernel = descent_kernel(model)
            report.result = group_result(kernel)
            report.check('matches_hom', kernel == hom_from_group(model.group, truncated_units(field)))
        elif options['group_ring']:
            G = load_group(options['group_ring'])
            model = group_ring_model(G)
            report.inputs = {'group_ring': str(G), 'order': G.order}
            outcome = group_ring_pic(G)
            report.result = group_result(outcome.pic)
            report.result['abelianization'] = group_result(outcome.abelianization)
            report.check('matches_abelianization', outcome.matches_abelianization)
            report.check('matches_second_cohomology', outcome.second_cohomology)
            report.check('connecting_isomorphism', outcome.connecting_isomorphism)
        else:
            model = load_model(options['model'])
            report.inputs = {'model': model.name or 'unnamed', 'group': str(model.group)}
            report.result = group_result(descent_kernel(model))

        bound = options['bound']
        if bound is not None:
            if bound < 1:
                raise InputError('--bound must be a positive integer')
            report.inputs['bound'] = bound
            report.check(f'killed_by_{bound}', kernel_torsion_bound_check(model, bound))
