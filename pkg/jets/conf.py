"""Read the JETGROUPS settings block, applying the environment overrides."""
import logging
import os

from django.conf import settings

logger = logging.getLogger(__name__)

DEFAULTS = {
    'MAX_JET_ORDER': 20,
    'MAX_TANGENT_ORDER': 8,
    'MAX_PARTITION_SIZE': 12,
    'MAX_BELL_INDEX': 12,
    'DEFAULT_TRIALS': 20,
    'DEFAULT_SEED': 7,
    'DEFAULT_CHECK_ORDER': 4,
}

MAX_K_ENV = 'JETGROUPS_MAX_K'


def get(name):
    configured = getattr(settings, 'JETGROUPS', {})
    return configured.get(name, DEFAULTS[name])


def _env_cap():
    raw = os.environ.get(MAX_K_ENV)
    if raw is None or raw == '':
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning('Ignoring %s=%r: not an integer', MAX_K_ENV, raw)
        return None
    if value < 1:
        logger.warning('Ignoring %s=%r: must be positive', MAX_K_ENV, raw)
        return None
    return value


def _capped(name):
    cap = get(name)
    env = _env_cap()
    # the environment may only lower a cap
    return cap if env is None else min(cap, env)


def max_jet_order():
    return _capped('MAX_JET_ORDER')


def max_tangent_order():
    return _capped('MAX_TANGENT_ORDER')


def max_partition_size():
    return get('MAX_PARTITION_SIZE')


def max_bell_index():
    return get('MAX_BELL_INDEX')
