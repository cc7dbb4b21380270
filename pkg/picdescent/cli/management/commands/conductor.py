from picdescent.cli.base import ReportCommand, group_result
from picdescent.exceptions import InputError
from picdescent.picard.conductor import (
    Cusp, LocalizedIntegers, NodeLikeUnitQuotient, conductor_square_pic, fraction_torsion_oracle, parse_field,
    parse_ring, pic_torsion,
)
from picdescent.picard.serializers import PicDescriptionSerializer

FAMILY_CHOICES = [
    ('cusp', 'k[T², T³] ⊂ k[T]'),
    ('node', 'D + (x-1)²D[x, x⁻¹] ⊂ D[x, x⁻¹]'),
]


class Command(ReportCommand):
    help = 'Describe Pic(A) for a conductor-square family and, optionally, its n-torsion'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', required=True, choices=[value for value, _ in FAMILY_CHOICES])
        parser.add_argument('--field', help='Cusp coefficient field: Q, F_q or GF(q)')
        parser.add_argument('--ring', default='Q', help='Node coefficient ring: Q or Z[1/m] (default: Q)')
        parser.add_argument('--torsion', type=int, metavar='N', help='Also report the N-torsion subgroup')

    def run(self, report, options):
        if options['family'] == 'cusp':
            if not options['field']:
                raise InputError('the cusp family needs --field')
            spec = Cusp(parse_field(options['field']))
            report.inputs = {'family': 'cusp', 'field': spec.field.name}
        else:
            spec = NodeLikeUnitQuotient(parse_ring(options['ring']))
            report.inputs = {'family': 'node', 'ring': spec.ring.name}

        pic = conductor_square_pic(spec)
        report.result = {'pic': PicDescriptionSerializer(pic).data, 'residue_units': spec.residue_units()}
        if pic.is_finite():
            report.result['group'] = group_result(pic.finite_group())

        n = options['torsion']
        if n is not None:
            report.inputs['torsion'] = n
            torsion = pic_torsion(pic, n)
            report.result['torsion'] = group_result(torsion)
            if spec.family == 'node':
                m = spec.ring.m if isinstance(spec.ring, LocalizedIntegers) else None
                census = fraction_torsion_oracle(m, n)
                report.check(
                    'torsion_matches_enumeration',
                    census.size == torsion.order() and census.cyclic == (len(torsion.invariant_factors) <= 1),
                )
