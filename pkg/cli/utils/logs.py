import json
import logging
import sys

LOG_LEVELS = ['critical', 'error', 'warning', 'info', 'debug']
LOG_FORMAT = '%(asctime)-15s [%(levelname)s] - %(message)s'


class JSONLogFormatter(logging.Formatter):
    def __init__(self):
        super(JSONLogFormatter, self).__init__('%(message)s')

    def format(self, record):
        message = super(JSONLogFormatter, self).format(record)
        return json.dumps({
            'level': record.levelname,
            'message': message,
            'logger': record.name
        }).replace('\n', ' ')


def _install(handler, log_level):
    logger = logging.getLogger()
    for existing in list(logger.handlers):
        logger.removeHandler(existing)
    logger.setLevel(logging.getLevelName(log_level.upper()))
    logger.addHandler(handler)
    return logger


def setup_json_logging(log_level='INFO', stream=None):
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JSONLogFormatter())
    return _install(handler, log_level)


def setup_basic_logging(log_level='INFO', stream=None):
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    return _install(handler, log_level)


def setup_logging(log_level='warning', log_format='text', stream=None):
    if log_format == 'json':
        return setup_json_logging(log_level, stream)
    return setup_basic_logging(log_level, stream)
