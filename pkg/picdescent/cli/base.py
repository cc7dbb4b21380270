import logging

from django.core.management.base import BaseCommand, CommandError

from picdescent.exceptions import CheckFailed, PicdescentError
from picdescent.zlattice.serializers import FgAbelianGroupSerializer

from .reports import FORMAT_CHOICES, RunReport, render

logger = logging.getLogger(__name__)


def group_result(group):
    """FgAbelianGroup JSON plus its printed form."""
    data = dict(FgAbelianGroupSerializer(group).data)
    data['description'] = str(group)
    return data


class ReportCommand(BaseCommand):
    """
    A management command that fills a RunReport and prints it.

    Library errors leave through CommandError with their exit status;
    failed checks leave with CheckFailed's status after the report is
    printed.
    """
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=[value for value, _ in FORMAT_CHOICES],
            default='json',
            help='Report format (default: json)',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, report, options):
        raise NotImplementedError('subclasses of ReportCommand must provide a run() method')

    @property
    def report_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        report = RunReport(self.report_name)
        try:
            with report.timed():
                self.run(report, options)
        except PicdescentError as exc:
            logger.debug('%s failed: %s', self.report_name, exc.detail)
            raise CommandError(exc.detail, returncode=exc.exit_status)
        self.stdout.write(render(report, options['format']))
        if not report.passed:
            raise CommandError(
                f'checks failed: {", ".join(report.failures())}',
                returncode=CheckFailed.exit_status,
            )
