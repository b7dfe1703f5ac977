import os

__this_dir = os.path.dirname(os.path.realpath(__file__))

REESLAB_HOME_DIR = os.path.abspath(os.path.join(__this_dir, os.pardir, os.pardir))
REESLAB_TEST_RES_DIR = os.path.join(REESLAB_HOME_DIR, 'test', 'testcases', 'res')

VERSION = '1.0.0'

DEFAULT_PRIME = 32003
DEFAULT_SEED = 42
DEFAULT_DEGREE_CAP = 30
DEFAULT_TIME_CAP = 300.
TIME_CAP_ENV_VAR = 'REESLAB_TIME_CAP'


class ReesLabError(Exception):
    """Base class of every error raised by the toolkit; carries machine-readable fields."""

    def __init__(self, message, **fields):
        super().__init__(message)
        self.message = message
        self.fields = fields

    def to_json(self):
        obj = {'success': False, 'type': type(self).__name__, 'message': str(self)}
        for key, value in self.fields.items():
            obj[key] = value if isinstance(value, (int, float, str, bool, type(None))) else str(value)
        return obj

    def __str__(self):
        return self.message


def jsonable(value):
    """Converts values to what json.dumps accepts, rendering infinite heights as "inf"."""
    if isinstance(value, float) and value == float('inf'):
        return 'inf'
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_json'):
        return jsonable(value.to_json())
    return value
