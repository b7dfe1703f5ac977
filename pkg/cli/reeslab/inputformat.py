import configparser
import logging

import regex

from cli.reeslab import ReesLabError
from cli.reeslab.config import AnalysisOptions
from cli.reeslab.groebner import Ideal
from cli.reeslab.modules import Matrix, NotHomogeneous, PresentedModule
from cli.reeslab.polynomials import FieldSpec, PolyRing, PolynomialSyntaxError, UnknownVariable

_logger = logging.getLogger('inputformat')

_LIST_SEPARATOR = regex.compile(r'\s*,\s*')
_ROW_SEPARATOR = regex.compile(r'\s*;\s*')
_IDEAL_KEY = regex.compile(r'ideal(\d+)')

DIRECT_SUM_OF_IDEALS = 'direct_sum_of_ideals'
PRESENTATION = 'presentation'


class InputError(ReesLabError):
    def __init__(self, message, section=None, key=None):
        where = ''
        if section is not None:
            where = ' [%s]' % section + ('.%s' % key if key is not None else '')
        super().__init__('invalid input%s: %s' % (where, message), section=section, key=key)
        self.section = section
        self.key = key


def _split(text, separator=_LIST_SEPARATOR):
    text = text.strip()
    if not text:
        return []
    return separator.split(text)


def _integers(text, section, key):
    try:
        return [int(v) for v in _split(text)]
    except ValueError:
        raise InputError('expected a comma-separated list of integers, found "%s"' % text, section, key)


class InputSpec(object):
    """An analysis input: ring, module (direct sum of ideals or presentation), optional U and options.

    [ring]        field, vars, degrees
    [module]      kind = direct_sum_of_ideals with ideal1, ideal2, ...; or kind = presentation with
                  matrix (rows separated by ';') and row_degrees
    [submodule]   generators, 1-based indices of the generators of U
    [config]      any AnalysisOptions field
    """

    @classmethod
    def load(cls, path):
        try:
            with open(path, 'r', encoding='utf-8') as stream:
                text = stream.read()
        except OSError as e:
            raise InputError('cannot read "%s": %s' % (path, e.strerror))
        return cls.from_string(text, source=path)

    @classmethod
    def from_string(cls, text, source='<string>'):
        parser = configparser.ConfigParser(inline_comment_prefixes=('#',), comment_prefixes=('#', ';'))
        try:
            parser.read_string(text, source=source)
        except configparser.Error as e:
            raise InputError(str(e).replace('\n', ' '))
        return cls(parser, source)

    def __init__(self, config_parser, source='<string>'):
        self.source = source
        self._config = config_parser

        for section in ('ring', 'module'):
            if not config_parser.has_section(section):
                raise InputError('missing section', section)

        self.ring = self._read_ring()
        self.kind = self._get('module', 'kind', DIRECT_SUM_OF_IDEALS)
        self.ideals = []
        self.module = self._read_module()
        self.subset = self._read_subset()
        self.options = self._read_options()

        _logger.info('Loaded %s: %s module over %s with %d generators'
                     % (source, self.kind, self.ring, self.module.n))

    def _get(self, section, key, default=None):
        if self._config.has_option(section, key):
            return self._config.get(section, key).strip()
        if default is None:
            raise InputError('missing key', section, key)
        return default

    def _read_ring(self):
        field_text = self._get('ring', 'field', '32003')
        try:
            field = FieldSpec(0 if field_text.upper() == 'QQ' else int(field_text))
        except ValueError as e:
            raise InputError(str(e), 'ring', 'field')

        variables = _split(self._get('ring', 'vars'))
        degrees = None
        if self._config.has_option('ring', 'degrees'):
            degrees = _integers(self._get('ring', 'degrees'), 'ring', 'degrees')

        try:
            return PolyRing(variables, field, degrees)
        except ValueError as e:
            raise InputError(str(e), 'ring')

    def _parse(self, text, section, key):
        try:
            return self.ring.parse(text)
        except (PolynomialSyntaxError, UnknownVariable) as e:
            raise InputError(str(e), section, key)

    def _read_module(self):
        if self.kind == DIRECT_SUM_OF_IDEALS:
            return self._read_direct_sum()
        if self.kind == PRESENTATION:
            return self._read_presentation()
        raise InputError('unknown module kind "%s"' % self.kind, 'module', 'kind')

    def _read_direct_sum(self):
        keys = []
        for key in self._config.options('module'):
            match = _IDEAL_KEY.fullmatch(key)
            if match:
                keys.append((int(match.group(1)), key))
            elif key != 'kind':
                raise InputError('unexpected key', 'module', key)
        if not keys:
            raise InputError('a direct sum needs at least one ideal (ideal1 = ...)', 'module')

        for _, key in sorted(keys):
            gens = [self._parse(text, 'module', key) for text in _split(self._get('module', key))]
            gens = [g for g in gens if g]
            if not gens:
                raise InputError('the zero ideal is not a valid summand', 'module', key)
            if not all(g.is_homogeneous() for g in gens):
                raise InputError('generators must be homogeneous', 'module', key)
            self.ideals.append(Ideal(self.ring, gens))

        return PresentedModule.direct_sum_of_ideals(self.ideals)

    def _read_presentation(self):
        rows = [[self._parse(text, 'module', 'matrix') for text in _split(row)]
                for row in _split(self._get('module', 'matrix'), _ROW_SEPARATOR)]
        if not rows:
            raise InputError('empty matrix', 'module', 'matrix')
        if len(set(len(row) for row in rows)) > 1:
            raise InputError('matrix rows have different lengths', 'module', 'matrix')

        row_degrees = None
        if self._config.has_option('module', 'row_degrees'):
            row_degrees = _integers(self._get('module', 'row_degrees'), 'module', 'row_degrees')
            if len(row_degrees) != len(rows):
                raise InputError('expected %d row degrees, found %d' % (len(rows), len(row_degrees)),
                                 'module', 'row_degrees')

        try:
            return PresentedModule(self.ring, Matrix(self.ring, rows), row_degrees)
        except NotHomogeneous as e:
            raise InputError(str(e), 'module', 'matrix')

    def _read_subset(self):
        if not self._config.has_option('submodule', 'generators'):
            return None

        indices = _integers(self._get('submodule', 'generators'), 'submodule', 'generators')
        n = self.module.n
        for i in indices:
            if not 1 <= i <= n:
                raise InputError('generator %d out of range 1..%d' % (i, n), 'submodule', 'generators')
        return tuple(sorted(set(i - 1 for i in indices)))

    def _read_options(self):
        options = AnalysisOptions()
        if self._config.has_section('config'):
            try:
                options.update(self._config.items('config'))
            except ValueError as e:
                raise InputError(str(e), 'config')
        return options

    def __repr__(self):
        return 'InputSpec(%s, kind=%s, ring=%s)' % (self.source, self.kind, self.ring)
