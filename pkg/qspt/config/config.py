import logging
from os import environ
from pathlib import Path

from qspt.config.configparser import Config


config = Config()
config.read('config.ini')
config.read('dev.ini')


TESTING_MODE = config.getboolean('Run', 'testing_mode', default=False)
NOT_TESTING_MODE = not TESTING_MODE


if TESTING_MODE:
    config.read('testing.ini')


LOGGING_LEVEL = logging.INFO if not config.getboolean('Logs', 'debug_mode', default=False) else logging.DEBUG
LOGGING_FORMAT = (
    '%(name)s :: %(levelname)s :: %(message)s'
    if NOT_TESTING_MODE else
    '%(asctime)s :: %(name)s :: %(message)s'
)
LOGGING_TIMESTAMP_FORMAT = '%m-%d %H:%M:%S'

BLOCK_SIZE = config.getint('Series', 'block_size', default=64)
REDUCED_EXPONENT = config.getint('Arithmetic', 'reduced_exponent', default=40)


def cache_directory() -> Path:
    return Path(environ.get('QSPT_CACHE_DIR') or config.getpath('Cache', 'directory', default=Path('.qspt_cache')))


CACHE_DIRECTORY = cache_directory()
