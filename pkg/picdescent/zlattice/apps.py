from django.apps import AppConfig


class ZlatticeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'picdescent.zlattice'
    verbose_name = 'Integer lattices'
