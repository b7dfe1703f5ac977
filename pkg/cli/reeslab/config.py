import os

from cli.reeslab import DEFAULT_DEGREE_CAP, DEFAULT_SEED, DEFAULT_TIME_CAP, TIME_CAP_ENV_VAR
from cli.reeslab.groebner import Budget


class AnalysisOptions(object):
    __custom_values = {'True': True, 'False': False, 'None': None}

    def __init__(self):
        self.seed = DEFAULT_SEED
        self.degree_cap = DEFAULT_DEGREE_CAP
        self.time_cap_seconds = DEFAULT_TIME_CAP
        self.bourbaki_mode = 'random'
        self.r_max = None  # l - e + 2
        self.s = None  # r(E) when unset
        self.max_power = None  # l - e
        self.reduction_retries = 3
        self.bourbaki_retries = 5
        self.stability_seeds = 3

    @classmethod
    def _parse(cls, value):
        if value in cls.__custom_values:
            value = cls.__custom_values[value]
        else:
            try:
                number = float(value)
                value = number if '.' in value else int(value)
            except ValueError:
                pass  # value is a string

        return value

    def update(self, items):
        """Updates options from (name, text) pairs such as the items of a config section."""
        for name, value in items:
            if not hasattr(self, name):
                raise ValueError('Invalid option "%s"' % name)
            setattr(self, name, self._parse(value) if isinstance(value, str) else value)
        return self

    def apply_args(self, args):
        """Command-line values override the input file; unset flags are None and leave options untouched."""
        for name in ('seed', 'r_max', 'degree_cap', 'max_power', 's'):
            value = getattr(args, name, None)
            if value is not None:
                setattr(self, name, value)

        if getattr(args, 'mode', None) is not None:
            self.bourbaki_mode = args.mode
        if getattr(args, 'time_cap', None) is not None:
            self.time_cap_seconds = args.time_cap
        return self

    def apply_environment(self, environ=None):
        environ = os.environ if environ is None else environ
        value = environ.get(TIME_CAP_ENV_VAR)
        if value:
            self.time_cap_seconds = float(value)
        return self

    def budget(self):
        return Budget(degree_cap=self.degree_cap, time_cap_seconds=self.time_cap_seconds)

    def to_json(self):
        return {
            'seed': self.seed,
            'degree_cap': self.degree_cap,
            'time_cap_seconds': self.time_cap_seconds,
            'bourbaki_mode': self.bourbaki_mode,
            'r_max': self.r_max,
            's': self.s,
            'reduction_retries': self.reduction_retries,
            'bourbaki_retries': self.bourbaki_retries,
            'stability_seeds': self.stability_seeds,
        }

    def __str__(self):
        return str(self.__dict__)
