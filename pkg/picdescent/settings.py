"""
Django settings for the picdescent project.

picdescent is a batch library and command-line front end; it serves no HTTP
traffic and keeps no database. Django provides the settings layer, the
management-command runner and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-picdescent-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'picdescent.zlattice.apps.ZlatticeConfig',
    'picdescent.gmodules.apps.GmodulesConfig',
    'picdescent.cohomology.apps.CohomologyConfig',
    'picdescent.picard.apps.PicardConfig',
    'picdescent.inseparable.apps.InseparableConfig',
    'picdescent.cli.apps.CliConfig',
]

# No app stores anything; every computation is a pure function of its inputs.
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework Configuration (serializers and renderers only)
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': (),
    'DEFAULT_PERMISSION_CLASSES': (),
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'COERCE_DECIMAL_TO_STRING': False,
}

# Computation guards
COHOMOLOGY_MAX_COORDINATES = config('COHOMOLOGY_MAX_COORDINATES', default=1_000_000, cast=int)
INSEPARABLE_MAX_Q = config('INSEPARABLE_MAX_Q', default=25, cast=int)
INSEPARABLE_MAX_DEGREE = config('INSEPARABLE_MAX_DEGREE', default=200, cast=int)

# Acceptance battery (`manage.py suite paper`)
SUITE_RANDOM_SEED = config('SUITE_RANDOM_SEED', default=20240601, cast=int)
SUITE_RANDOM_MODULES = config('SUITE_RANDOM_MODULES', default=100, cast=int)
SUITE_RANDOM_MATRICES = config('SUITE_RANDOM_MATRICES', default=500, cast=int)
SUITE_EXACTNESS_SEQUENCES = config('SUITE_EXACTNESS_SEQUENCES', default=25, cast=int)
SUITE_INFLATION_TRIPLES = config('SUITE_INFLATION_TRIPLES', default=25, cast=int)
SUITE_SHAPIRO_TRIPLES = config('SUITE_SHAPIRO_TRIPLES', default=15, cast=int)

# Logging
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'picdescent': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
