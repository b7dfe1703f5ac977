import json

from cli.reeslab import VERSION, ReesLabError, jsonable
from cli.reeslab.checker import FAILS, HOLDS, NOT_APPLICABLE, NOT_COMPUTABLE, PROBABLY_HOLDS
from cli.reeslab.groebner import BudgetExceeded

JSON = 'json'
TEXT = 'text'

_GLYPHS = {
    HOLDS: '[+]',
    PROBABLY_HOLDS: '[~]',
    FAILS: '[x]',
    NOT_COMPUTABLE: '[?]',
    NOT_APPLICABLE: '[-]',
}


def not_computable(error):
    """Report entry for an invariant that could not be computed."""
    if isinstance(error, BudgetExceeded):
        return {'status': NOT_COMPUTABLE, 'budget': error.budget, 'limit': error.limit}
    return {'status': NOT_COMPUTABLE, 'error': type(error).__name__, 'message': str(error)}


def computed(function, *args):
    try:
        return function(*args)
    except ReesLabError as e:
        return not_computable(e)


class AnalysisReport(object):
    def __init__(self, source, options, field):
        self.source = source
        self.options = options
        self.field = field
        self.invariants = {}
        self.theorem_reports = []
        self.timings = None

    def set_invariant(self, name, function, *args):
        """Stores function(*args) under name, or a not-computable entry when it fails."""
        value = computed(function, *args)
        self.invariants[name] = value
        return value

    @property
    def consistent(self):
        return all(r.consistent for r in self.theorem_reports)

    def to_json(self):
        environment = {
            'field': str(self.field),
            'seed': self.options.seed,
            'options': self.options.to_json(),
            'budgets': {'degree_cap': self.options.degree_cap, 'time_cap_seconds': self.options.time_cap_seconds},
        }
        if self.timings is not None:
            environment['timings'] = dict(self.timings)

        return {
            'success': True,
            'version': VERSION,
            'input': self.source,
            'invariants': jsonable(self.invariants),
            'theorem_reports': [r.to_json() for r in self.theorem_reports],
            'consistent': self.consistent,
            'environment': environment,
        }


def _dumps(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def error_object(error):
    obj = error.to_json() if hasattr(error, 'to_json') else \
        {'success': False, 'type': type(error).__name__, 'message': str(error)}
    obj['version'] = VERSION
    return obj


def emit_error(error):
    return _dumps(error_object(error)).encode('utf-8')


def _format_value(value):
    if isinstance(value, dict):
        return ', '.join('%s=%s' % (k, _format_value(v)) for k, v in sorted(value.items(), key=lambda kv: str(kv[0])))
    if isinstance(value, (list, tuple)):
        return '[%s]' % ', '.join(_format_value(v) for v in value)
    return str(jsonable(value))


def _text(report):
    obj = report.to_json()
    lines = ['reeslab %s - %s' % (obj['version'], obj['input']), '']

    lines.append('Invariants')
    for name, value in sorted(obj['invariants'].items()):
        lines.append('  %-20s %s' % (name, _format_value(value)))

    for theorem in obj['theorem_reports']:
        lines.append('')
        lines.append('Theorem %s: %s%s' % (theorem['theorem'], theorem['status'],
                                           '' if theorem['consistent'] else ' (INCONSISTENT)'))
        for h in theorem['hypotheses']:
            detail = h.get('witness', h.get('value'))
            lines.append('  %s %-24s %s' % (_GLYPHS.get(h['status'], '[ ]'), h['name'],
                                             '' if detail is None else _format_value(detail)))
        lines.append('  conclusion:    %s' % _format_value(theorem['conclusion']))
        lines.append('  direct check:  %s' % _format_value(theorem['direct_verification']))

    environment = obj['environment']
    lines.append('')
    lines.append('field %s, seed %s, degree cap %s, time cap %ss' % (
        environment['field'], environment['seed'], environment['budgets']['degree_cap'],
        environment['budgets']['time_cap_seconds']))
    if 'timings' in environment:
        lines.append('timings: %s' % _format_value(environment['timings']))
    return '\n'.join(lines) + '\n'


def emit_report(report, format=JSON):
    """Serializes a report; JSON output has sorted keys so equal reports give identical bytes."""
    if format == JSON:
        return _dumps(report.to_json()).encode('utf-8')
    if format == TEXT:
        return _text(report).encode('utf-8')
    raise ValueError('Unknown report format "%s"' % format)


def emit_object(obj, format=JSON):
    """Serializes the output of the rees and bourbaki commands."""
    if format == JSON:
        return _dumps(obj).encode('utf-8')
    if format != TEXT:
        raise ValueError('Unknown report format "%s"' % format)

    lines = []
    for key, value in sorted(jsonable(obj).items()):
        if isinstance(value, list) and value and not isinstance(value[0], (list, dict)):
            lines.append('%s:' % key)
            lines.extend('  %s' % v for v in value)
        elif isinstance(value, dict):
            lines.append('%s:' % key)
            lines.extend('  %s: %s' % (k, _format_value(v)) for k, v in sorted(value.items()))
        else:
            lines.append('%s: %s' % (key, _format_value(value)))
    return ('\n'.join(lines) + '\n').encode('utf-8')
