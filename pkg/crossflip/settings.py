# settings.py - TOOLKIT VERSION

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals; nothing here is served.
SECRET_KEY = config('DJANGO_SECRET_KEY', default='crossflip-local-only')

DEBUG = config('DJANGO_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
# contenttypes and auth stay for rest_framework; no model of theirs is ever queried.
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'topology',
]

# No DATABASES: the toolkit keeps no state and the tests are SimpleTestCase only.

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'UNICODE_JSON': True,
}

# TOPOLOGY SEARCH LIMITS
# Nodes explored by the canonical-form search before giving up
TOPOLOGY_ISO_NODE_BUDGET = config('TOPOLOGY_ISO_NODE_BUDGET', default=200000, cast=int)
# Nodes explored by shelling searches
TOPOLOGY_SHELLING_BUDGET = config('TOPOLOGY_SHELLING_BUDGET', default=500000, cast=int)
# Embeddings listed per cross-flip template when enumerating moves
TOPOLOGY_EMBEDDING_LIMIT = config('TOPOLOGY_EMBEDDING_LIMIT', default=64, cast=int)
# Applied moves allowed to heuristic reductions
TOPOLOGY_REDUCTION_BUDGET = config('TOPOLOGY_REDUCTION_BUDGET', default=2000, cast=int)

# Annealing schedule
TOPOLOGY_ANNEALING_TEMPERATURE = config('TOPOLOGY_ANNEALING_TEMPERATURE', default=1.0, cast=float)
TOPOLOGY_ANNEALING_DECAY = config('TOPOLOGY_ANNEALING_DECAY', default=0.999, cast=float)

# Seed used by every randomized command when --seed is not given
TOPOLOGY_DEFAULT_SEED = config('TOPOLOGY_DEFAULT_SEED', default=20240601, cast=int)

# Generated vertex labels are <prefix><counter>
TOPOLOGY_FRESH_PREFIX = config('TOPOLOGY_FRESH_PREFIX', default='n')

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': config('TOPOLOGY_LOG_LEVEL', default='INFO'),
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': config('TOPOLOGY_LOG_FILE', default='crossflip.log'),
            'maxBytes': 10*1024*1024,  # 10MB
            'backupCount': 5,
            'formatter': 'verbose',
        },
        'console': {
            'level': config('TOPOLOGY_CONSOLE_LOG_LEVEL', default='WARNING'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'INFO',
    },
    'loggers': {
        'topology': {
            'level': config('TOPOLOGY_LOG_LEVEL', default='INFO'),
            'handlers': ['console', 'file'],
            'propagate': False,
        },
    },
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
