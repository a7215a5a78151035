# conf.py - access to the TOPOLOGY_* settings with library defaults
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'TOPOLOGY_ISO_NODE_BUDGET': 200000,
    'TOPOLOGY_SHELLING_BUDGET': 500000,
    'TOPOLOGY_EMBEDDING_LIMIT': 64,
    'TOPOLOGY_REDUCTION_BUDGET': 2000,
    'TOPOLOGY_ANNEALING_TEMPERATURE': 1.0,
    'TOPOLOGY_ANNEALING_DECAY': 0.999,
    'TOPOLOGY_DEFAULT_SEED': 20240601,
    'TOPOLOGY_FRESH_PREFIX': 'n',
}


def setting(name):
    """Read a toolkit setting, falling back to the default outside a configured project."""
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]


def resolve(value, name):
    """Return ``value`` unless it is None, in which case the configured setting."""
    return setting(name) if value is None else value
