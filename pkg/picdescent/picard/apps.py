from django.apps import AppConfig


class PicardConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'picdescent.picard'
    verbose_name = 'Picard groups and descent kernels'
