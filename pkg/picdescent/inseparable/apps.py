from django.apps import AppConfig


class InseparableConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'picdescent.inseparable'
    verbose_name = 'Purely inseparable extensions'
