from django.apps import AppConfig


class GmodulesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'picdescent.gmodules'
    verbose_name = 'Finite groups and G-modules'
