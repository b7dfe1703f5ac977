from fractions import Fraction

import regex

from cli.reeslab import DEFAULT_PRIME, ReesLabError

LT, EQ, GT = -1, 0, 1


class RingMismatch(ReesLabError):
    def __init__(self, left, right):
        super().__init__('operands belong to different rings: %s and %s' % (left, right),
                         left=str(left), right=str(right))


class UnknownVariable(ReesLabError):
    def __init__(self, name, position=None):
        message = 'unknown variable "%s"' % name
        if position is not None:
            message += ' at position %d' % position
        super().__init__(message, variable=name, position=position)
        self.name = name
        self.position = position


class PolynomialSyntaxError(ReesLabError):
    def __init__(self, text, position, reason):
        super().__init__('%s at position %d in "%s"' % (reason, position, text), position=position, reason=reason)
        self.text = text
        self.position = position
        self.reason = reason


class LengthMismatch(ReesLabError):
    def __init__(self, left, right):
        super().__init__('exponent vectors have different lengths (%d and %d)' % (left, right))


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class FieldSpec(object):
    RATIONALS = 'rationals'
    PRIME_FIELD = 'prime_field'

    def __init__(self, characteristic=DEFAULT_PRIME):
        characteristic = int(characteristic)
        if characteristic != 0 and (characteristic < 3 or not _is_prime(characteristic)):
            raise ValueError('Invalid field characteristic %d: must be 0 or an odd prime' % characteristic)
        self.characteristic = characteristic

    @classmethod
    def rationals(cls):
        return cls(0)

    @property
    def kind(self):
        return self.PRIME_FIELD if self.characteristic else self.RATIONALS

    def element(self, value):
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError('%s is not defined in characteristic %d' % (value, p))
                return value.numerator * pow(value.denominator, p - 2, p) % p
            return int(value) % p
        return Fraction(value)

    def normalize(self, c):
        return c % self.characteristic if self.characteristic else c

    def inverse(self, c):
        if c == 0:
            raise ZeroDivisionError('zero has no inverse')
        p = self.characteristic
        return pow(c, p - 2, p) if p else 1 / Fraction(c)

    def signed(self, c):
        p = self.characteristic
        if p and c > p // 2:
            return c - p
        return c

    def random_element(self, rng):
        """Uniform nonzero scalar drawn from the seeded numpy generator."""
        if self.characteristic:
            return int(rng.integers(1, self.characteristic))
        return Fraction(int(rng.integers(1, 100)))

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(('FieldSpec', self.characteristic))

    def __str__(self):
        return 'ZZ/%d' % self.characteristic if self.characteristic else 'QQ'

    def __repr__(self):
        return 'FieldSpec(%d)' % self.characteristic


class MonomialOrder(object):
    GREVLEX = 'grevlex'
    LEX = 'lex'
    BLOCK = 'block'

    def __init__(self, kind=GREVLEX, elim_count=None, inner=None, outer=None):
        if kind not in (self.GREVLEX, self.LEX, self.BLOCK):
            raise ValueError('Invalid monomial order "%s"' % kind)
        if kind == self.BLOCK:
            if elim_count is None or elim_count < 1:
                raise ValueError('Block order needs at least one eliminated variable')
            inner = inner or MonomialOrder()
            outer = outer or MonomialOrder()
        else:
            elim_count = inner = outer = None

        self.kind = kind
        self.elim_count = elim_count
        self.inner = inner
        self.outer = outer

    @classmethod
    def grevlex(cls):
        return cls(cls.GREVLEX)

    @classmethod
    def lex(cls):
        return cls(cls.LEX)

    @classmethod
    def block(cls, elim_count, inner=None, outer=None):
        return cls(cls.BLOCK, elim_count, inner, outer)

    def key_function(self, degrees):
        """Returns a function mapping exponent vectors to sort keys: larger key, larger monomial."""
        degrees = tuple(degrees)

        if self.kind == self.GREVLEX:
            def key(exp):
                return sum(w * e for w, e in zip(degrees, exp)), tuple(-e for e in reversed(exp))
        elif self.kind == self.LEX:
            def key(exp):
                return exp
        else:
            k = self.elim_count
            if k > len(degrees):
                raise ValueError('Block order eliminates %d variables but the ring has %d' % (k, len(degrees)))
            inner_key = self.inner.key_function(degrees[:k])
            outer_key = self.outer.key_function(degrees[k:])

            def key(exp):
                return inner_key(exp[:k]), outer_key(exp[k:])

        return key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and \
               (self.kind, self.elim_count, self.inner, self.outer) == \
               (other.kind, other.elim_count, other.inner, other.outer)

    def __hash__(self):
        return hash((self.kind, self.elim_count, self.inner, self.outer))

    def __str__(self):
        if self.kind == self.BLOCK:
            return 'block(%d, %s, %s)' % (self.elim_count, self.inner, self.outer)
        return self.kind

    def __repr__(self):
        return 'MonomialOrder(%s)' % str(self)


def monomial_compare(order, u, v, degrees=None):
    if len(u) != len(v):
        raise LengthMismatch(len(u), len(v))

    key = order.key_function(degrees if degrees is not None else (1,) * len(u))
    ku, kv = key(tuple(u)), key(tuple(v))
    return GT if ku > kv else (LT if ku < kv else EQ)


_VARIABLE_NAME = regex.compile(r'[a-zA-Z][a-zA-Z0-9]*')


class PolyRing(object):
    def __init__(self, variables, field=None, degrees=None, order=None):
        variables = tuple(variables)
        for name in variables:
            if not _VARIABLE_NAME.fullmatch(name):
                raise ValueError('Invalid variable name "%s"' % name)
        if len(set(variables)) != len(variables):
            raise ValueError('Duplicate variable names in %s' % ', '.join(variables))

        degrees = tuple(int(d) for d in degrees) if degrees is not None else (1,) * len(variables)
        if len(degrees) != len(variables):
            raise ValueError('Expected %d variable degrees, found %d' % (len(variables), len(degrees)))
        if any(d < 1 for d in degrees):
            raise ValueError('Variable degrees must be positive')

        self.variables = variables
        self.degrees = degrees
        self.field = field or FieldSpec()
        self.order = order or MonomialOrder.grevlex()

        self._key = self.order.key_function(degrees)
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def ngens(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name)

    def sort_key(self, exp):
        return self._key(exp)

    def degree(self, exp):
        return sum(w * e for w, e in zip(self.degrees, exp))

    def zero(self):
        return Polynomial(self)

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.ngens: c})

    def monomial(self, exp, coefficient=1):
        return Polynomial(self, {tuple(exp): coefficient})

    def gen(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exp = [0] * self.ngens
        exp[i] = 1
        return self.monomial(exp)

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def parse(self, text):
        return parse_polynomial(self, text)

    def with_order(self, order):
        return PolyRing(self.variables, self.field, self.degrees, order)

    def extend(self, names, degrees=None, prepend=False, order=None):
        names = tuple(names)
        degrees = tuple(degrees) if degrees is not None else (1,) * len(names)
        if prepend:
            return PolyRing(names + self.variables, self.field, degrees + self.degrees, order)
        return PolyRing(self.variables + names, self.field, self.degrees + degrees, order)

    def subring(self, names):
        names = [v for v in self.variables if v in set(names)]
        return PolyRing(names, self.field, [self.degrees[self._index[v]] for v in names])

    def fresh_names(self, prefix, count):
        while any(v.startswith(prefix) for v in self.variables):
            prefix += prefix[-1]
        return ['%s%d' % (prefix, i + 1) for i in range(count)]

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables and \
               self.degrees == other.degrees and self.field == other.field and self.order == other.order

    def __hash__(self):
        return hash((self.variables, self.degrees, self.field, self.order))

    def __str__(self):
        return '%s[%s]' % (self.field, ', '.join(self.variables))

    def __repr__(self):
        return 'PolyRing(%s, degrees=%s, order=%s)' % (str(self), self.degrees, self.order)


class Polynomial(object):
    """Immutable polynomial: a map exponent-vector -> nonzero coefficient over a PolyRing."""

    __slots__ = ('ring', '_terms', '_sorted', '_hash')

    def __init__(self, ring, terms=None):
        field = ring.field
        n = ring.ngens
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise LengthMismatch(len(exp), n)
            c = field.element(c)
            if c != 0:
                clean[exp] = c

        self.ring = ring
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        assert 0 not in terms.values(), 'zero coefficient stored'
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._sorted = None
        poly._hash = None
        return poly

    # ---- Inspection ----

    def items(self):
        return self._terms.items()

    @property
    def terms(self):
        if self._sorted is None:
            key = self.ring.sort_key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def lead_exponent(self):
        return self.terms[0][0]

    @property
    def lead_coefficient(self):
        return self.terms[0][1]

    def lead_term(self):
        exp, c = self.terms[0]
        return Polynomial._raw(self.ring, {exp: c})

    def degree(self):
        if not self._terms:
            return None
        return max(self.ring.degree(exp) for exp in self._terms)

    def is_homogeneous(self):
        return len({self.ring.degree(exp) for exp in self._terms}) <= 1

    def is_constant(self):
        return all(not any(exp) for exp in self._terms)

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.ngens, 0)

    def support(self):
        used = set()
        for exp in self._terms:
            used.update(i for i, e in enumerate(exp) if e)
        return {self.ring.variables[i] for i in used}

    # ---- Arithmetic ----

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(self.ring, other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nrm = self.ring.field.normalize
        result = dict(self._terms)
        for exp, c in other._terms.items():
            value = nrm(result.get(exp, 0) + c)
            if value:
                result[exp] = value
            else:
                result.pop(exp, None)
        return Polynomial._raw(self.ring, result)

    __radd__ = __add__

    def __neg__(self):
        nrm = self.ring.field.normalize
        return Polynomial._raw(self.ring, {exp: nrm(-c) for exp, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nrm = self.ring.field.normalize
        result = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                result[exp] = nrm(result.get(exp, 0) + c1 * c2)
        return Polynomial._raw(self.ring, {exp: c for exp, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('Exponent must be a non-negative integer')
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c):
        field = self.ring.field
        c = field.element(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {exp: field.normalize(a * c) for exp, a in self._terms.items()})

    def mul_term(self, exp, c=1):
        field = self.ring.field
        c = field.element(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {tuple(a + b for a, b in zip(e, exp)): field.normalize(a * c)
                                           for e, a in self._terms.items()})

    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.ring.field.inverse(self.lead_coefficient))

    def exact_quotient(self, divisor):
        """Quotient of an exact division; raises ValueError when divisor does not divide self."""
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError('division by zero polynomial')

        field = self.ring.field
        lead_exp, lead_c = divisor.terms[0]
        inverse = field.inverse(lead_c)
        quotient = {}
        remainder = self
        while remainder:
            exp, c = remainder.terms[0]
            shift = tuple(a - b for a, b in zip(exp, lead_exp))
            if any(s < 0 for s in shift):
                raise ValueError('%s does not divide %s' % (divisor, self))
            q = field.normalize(c * inverse)
            quotient[shift] = q
            remainder = remainder - divisor.mul_term(shift, q)
        return Polynomial._raw(self.ring, quotient)

    # ---- Ring changes ----

    def change_ring(self, ring):
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatch(self.ring, ring)

        mapping = [ring.index(name) if name in ring.variables else None for name in self.ring.variables]
        n = ring.ngens
        result = {}
        for exp, c in self._terms.items():
            target = [0] * n
            for i, e in enumerate(exp):
                if e:
                    if mapping[i] is None:
                        raise UnknownVariable(self.ring.variables[i])
                    target[mapping[i]] = e
            result[tuple(target)] = c
        return Polynomial._raw(ring, result)

    def substitute(self, values):
        """Replaces variables by polynomials of the same ring or by scalars."""
        ring = self.ring
        images = []
        for name in ring.variables:
            value = values.get(name)
            if value is None:
                images.append(ring.gen(name))
            elif isinstance(value, Polynomial):
                images.append(value.change_ring(ring) if value.ring != ring else value)
            else:
                images.append(ring.constant(value))

        result = ring.zero()
        for exp, c in self._terms.items():
            term = ring.constant(c)
            for image, e in zip(images, exp):
                if e:
                    term = term * image ** e
            result = result + term
        return result

    # ---- Comparison and rendering ----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self):
        if not self._terms:
            return '0'

        field = self.ring.field
        parts = []
        for exp, c in self.terms:
            c = field.signed(c)
            negative = c < 0
            magnitude = -c if negative else c
            monomial = '*'.join(name if e == 1 else '%s^%d' % (name, e)
                                for name, e in zip(self.ring.variables, exp) if e)

            if isinstance(magnitude, Fraction) and magnitude.denominator != 1:
                coefficient = '%d/%d' % (magnitude.numerator, magnitude.denominator)
            else:
                coefficient = str(int(magnitude))

            if not monomial:
                body = coefficient
            elif coefficient == '1':
                body = monomial
            else:
                body = coefficient + '*' + monomial

            if not parts:
                parts.append('-' + body if negative else body)
            else:
                parts.append(('- ' if negative else '+ ') + body)
        return ' '.join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return 'Polynomial(%s)' % self.render()


def poly_arith(a, b, op):
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError('Invalid operation "%s"' % op)


# ---- Parsing ----

_TOKEN = regex.compile(r'(?P<space>\s+)|(?P<int>\d+)|(?P<var>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*^/()])')


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise PolynomialSyntaxError(text, position, 'unexpected character "%s"' % text[position])
        if match.lastgroup != 'space':
            tokens.append((match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser(object):
    def __init__(self, ring, text):
        self._ring = ring
        self._text = text
        self._tokens = _tokenize(text)
        self._i = 0

    def _peek(self):
        return self._tokens[self._i]

    def _next(self):
        token = self._tokens[self._i]
        self._i += 1
        return token

    def _is_op(self, *symbols):
        kind, value, _ = self._peek()
        return kind == 'op' and value in symbols

    def _fail(self, reason, position=None):
        raise PolynomialSyntaxError(self._text, self._peek()[2] if position is None else position, reason)

    def parse(self):
        if self._peek()[0] == 'end':
            self._fail('empty expression')
        result = self._expr()
        if self._peek()[0] != 'end':
            self._fail('unexpected "%s"' % self._peek()[1])
        return result

    def _expr(self):
        negative = False
        if self._is_op('+', '-'):
            negative = self._next()[1] == '-'

        result = self._term()
        if negative:
            result = -result

        while self._is_op('+', '-'):
            op = self._next()[1]
            term = self._term()
            result = result + term if op == '+' else result - term
        return result

    def _term(self):
        result = self._factor()
        while self._is_op('*'):
            self._next()
            result = result * self._factor()
        return result

    def _factor(self):
        result = self._primary()
        while self._is_op('^'):
            self._next()
            kind, value, position = self._next()
            if kind != 'int':
                self._fail('exponent must be a non-negative integer', position)
            result = result ** int(value)
        return result

    def _primary(self):
        kind, value, position = self._next()

        if kind == 'int':
            number = int(value)
            if self._is_op('/'):
                self._next()
                kind, value, position = self._next()
                if kind != 'int' or int(value) == 0:
                    self._fail('invalid denominator', position)
                try:
                    return self._ring.constant(Fraction(number, int(value)))
                except ZeroDivisionError:
                    self._fail('denominator not invertible in %s' % self._ring.field, position)
            return self._ring.constant(number)

        if kind == 'var':
            if value not in self._ring.variables:
                raise UnknownVariable(value, position)
            return self._ring.gen(value)

        if kind == 'op' and value == '(':
            result = self._expr()
            if not self._is_op(')'):
                self._fail('missing ")"')
            self._next()
            return result

        self._fail('unexpected "%s"' % value if value else 'unexpected end of expression', position)


def parse_polynomial(ring, text):
    return _Parser(ring, text).parse()
