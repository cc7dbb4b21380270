from django.apps import AppConfig


class CliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'picdescent.cli'
    verbose_name = 'Command-line reports and acceptance suite'
