"""
Django settings for the gradedflip project.

The project has no web surface: Django provides configuration, the app
registry, the management-command CLI and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from gradedflip import __version__

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or served; Django still insists on a key.
SECRET_KEY = os.getenv('GRADEDFLIP_SECRET_KEY', 'gradedflip-local-only')

DEBUG = os.getenv('GRADEDFLIP_DEBUG', 'false').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'algebra',
    'rings',
    'grobner',
    'complexes',
    'cohomology',
    'windows',
    'reports',
]

# No models are persisted; the in-memory backend keeps the test runner happy.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('GRADEDFLIP_LOG_LEVEL', 'WARNING'),
    },
}


# Tool configuration

GRADEDFLIP = {
    'VERSION': __version__,
    'JSON_SCHEMA_VERSION': 1,
    # Polynomial reductions allowed per Groebner computation.
    'GROEBNER_STEP_BUDGET': int(os.getenv('GRADEDFLIP_BUDGET', 10**6)),
    # Weight tables cover |i| <= max(MIN_WEIGHT_RADIUS, eta+ + eta- + 2).
    'MIN_WEIGHT_RADIUS': int(os.getenv('GRADEDFLIP_MIN_WEIGHT_RADIUS', 8)),
    # Exponent bound for weight-0 variables, whose weight slices are infinite.
    'ZERO_WEIGHT_BOX': int(os.getenv('GRADEDFLIP_ZERO_WEIGHT_BOX', 6)),
    # Exponent box used for weightwise Euler-characteristic certificates.
    'EULER_BOX': int(os.getenv('GRADEDFLIP_EULER_BOX', 8)),
    'FUNCTOR_TWISTS': [
        int(twist) for twist in os.getenv('GRADEDFLIP_FUNCTOR_TWISTS', '-1,0,1,2').split(',')
    ],
}
