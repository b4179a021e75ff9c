import configparser, os
from os.path import dirname, join

import graphflow

GRAPHFLOW_CONF_PATH = os.getenv('GRAPHFLOW_CONF', '/etc/graphflow.conf')

DATA_DIR = None
THREADS = 1
LOG_LEVEL = None
LIMITS = {}
SETUP = False

if not SETUP:
    from graphflow.logger.base import get_logger

    log = get_logger("GraphflowConf")

    if os.path.exists(GRAPHFLOW_CONF_PATH):
        config = configparser.ConfigParser()
        config.read(GRAPHFLOW_CONF_PATH)
        defaults = config['DEFAULT']
        DATA_DIR = defaults.get('data_dir', None)
        THREADS = defaults.getint('threads', THREADS)
        LOG_LEVEL = int(defaults['log_lvl']) if 'log_lvl' in defaults else None
        if config.has_section('limits'):
            LIMITS = {k.upper(): int(v) for k, v in config.items('limits') if k not in defaults}
        log.debug('Loaded settings from {}'.format(GRAPHFLOW_CONF_PATH))

    SETUP = True


def default_data_dir():
    return join(dirname(dirname(graphflow.__file__)), 'data')


def resolve_data_dir(explicit=None):
    if explicit:
        return explicit
    env = os.getenv('GRAPHFLOW_DATA')
    if env:
        return env
    if DATA_DIR:
        return DATA_DIR
    return default_data_dir()
