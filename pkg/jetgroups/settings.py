"""
Django settings for the jetgroups project.

The project has no web surface: Django provides the management-command
front end, the settings layer, form validation of input files and the
test runner. Everything computational lives in the ``jets`` app.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Not used for any signing; Django refuses to start without one.
SECRET_KEY = os.environ.get('JETGROUPS_SECRET_KEY', 'jetgroups-local-only')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'jets',  # Jet and tangent group arithmetic
]


# No models anywhere, so no database either.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging
# Standard output carries the JSON payload of every command, so all log
# records go to standard error.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'jets': {
            'handlers': ['console'],
            'level': os.environ.get('JETGROUPS_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Jet group limits and verification defaults.
# JETGROUPS_MAX_K in the environment may lower (never raise) the two order caps.

JETGROUPS = {
    'MAX_JET_ORDER': 20,
    'MAX_TANGENT_ORDER': 8,
    'MAX_PARTITION_SIZE': 12,
    'MAX_BELL_INDEX': 12,
    'DEFAULT_TRIALS': 20,
    'DEFAULT_SEED': 7,
    'DEFAULT_CHECK_ORDER': 4,
}
