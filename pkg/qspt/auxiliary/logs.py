import logging
from logging import Formatter, LogRecord, StreamHandler, getLogger
from math import floor
from statistics import mean

import colorama
from colorama import Fore

from qspt.auxiliary.time import Timestamp
from qspt.config.config import LOGGING_FORMAT, LOGGING_LEVEL, LOGGING_TIMESTAMP_FORMAT


Color = str
VERBOSE = floor(mean([logging.DEBUG, logging.INFO]))


class ColoredFormatter(Formatter):
    COLORS: dict[int, Color] = {
        logging.DEBUG:    Fore.BLUE,
        VERBOSE:          Fore.MAGENTA,
        logging.INFO:     Fore.RESET,
        logging.WARNING:  Fore.YELLOW,
        logging.ERROR:    Fore.RED,
        logging.CRITICAL: Fore.RED,
    }

    def format(self, record: LogRecord):
        return self.COLORS.get(record.levelno, Fore.RESET) + super().format(record)


_configured = False


def setup_logging(level: int = LOGGING_LEVEL):
    global _configured

    logging.addLevelName(VERBOSE, 'VERBOSE')

    root_logger = getLogger()
    root_logger.setLevel(level=level)

    if _configured:
        for handler in root_logger.handlers:
            handler.setLevel(level)
        return

    logging.Formatter.converter = lambda *args: Timestamp.now().timetuple()
    colorama.init(autoreset=True)

    handler = StreamHandler()
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(LOGGING_FORMAT, datefmt=LOGGING_TIMESTAMP_FORMAT))
    root_logger.addHandler(handler)

    _configured = True
