import contextvars
import itertools
import logging
import math
import os
import threading
import time

import cachetools
from cachetools.keys import hashkey

from cli.reeslab import DEFAULT_DEGREE_CAP, DEFAULT_TIME_CAP, TIME_CAP_ENV_VAR, ReesLabError
from cli.reeslab.polynomials import MonomialOrder, Polynomial, PolyRing, RingMismatch

HEIGHT_INFINITY = math.inf

_logger = logging.getLogger('groebner')


class BudgetExceeded(ReesLabError):
    def __init__(self, budget, limit, value):
        super().__init__('%s budget exceeded: %s > %s' % (budget, value, limit), budget=budget, limit=limit,
                         value=value)
        self.budget = budget
        self.limit = limit
        self.value = value


_active_budget = contextvars.ContextVar('reeslab_budget', default=None)


class Budget(object):
    """Caps applied to every Gröbner basis computation started while the budget is active.

    Every overrun is appended to `exceeded`, also when a caller turns it into a not-computable entry.
    """

    def __init__(self, degree_cap=DEFAULT_DEGREE_CAP, time_cap_seconds=DEFAULT_TIME_CAP):
        self.degree_cap = degree_cap
        self.time_cap_seconds = time_cap_seconds
        self.exceeded = []
        self._tokens = []

    @classmethod
    def default(cls):
        time_cap = os.environ.get(TIME_CAP_ENV_VAR)
        return cls(time_cap_seconds=float(time_cap)) if time_cap else cls()

    @staticmethod
    def current():
        budget = _active_budget.get()
        return budget if budget is not None else Budget.default()

    def __enter__(self):
        self._tokens.append(_active_budget.set(self))
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        _active_budget.reset(self._tokens.pop())

    def start(self):
        return _Deadline(self)

    def __repr__(self):
        return 'Budget(degree_cap=%s, time_cap_seconds=%s)' % (self.degree_cap, self.time_cap_seconds)


class _Deadline(object):
    def __init__(self, budget):
        self._budget = budget
        self._begin = time.monotonic()

    def _exceeded(self, error):
        self._budget.exceeded.append(error)
        return error

    def check_degree(self, degree):
        cap = self._budget.degree_cap
        if cap is not None and degree > cap:
            _logger.warning('Degree cap %d exceeded (degree %d)' % (cap, degree))
            raise self._exceeded(BudgetExceeded('degree', cap, degree))

    def check_time(self):
        cap = self._budget.time_cap_seconds
        if cap is not None:
            elapsed = time.monotonic() - self._begin
            if elapsed > cap:
                _logger.warning('Time cap %ss exceeded' % cap)
                raise self._exceeded(BudgetExceeded('time', cap, round(elapsed, 1)))


# ---- Buchberger kernel on vectors ----

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Buchberger(object):
    """Buchberger's algorithm with Gebauer-Möller pair management and sugar selection.

    Elements are vectors {(position, exponent): coefficient}; ideals are vectors supported on position 0.
    Terms are ordered by (position block, monomial, -position).
    """

    def __init__(self, ring, position_degrees=None, position_blocks=None, module=False):
        field = ring.field
        self._ring = ring
        self._normalize = field.normalize
        self._inverse = field.inverse
        self._monomial_key = ring.sort_key
        self._pos_degrees = tuple(position_degrees or ())
        self._pos_blocks = tuple(position_blocks or ())
        self._product_criterion = not module
        self._keys = {}
        self._deadline = None

    def key(self, term):
        k = self._keys.get(term)
        if k is None:
            pos, exp = term
            block = self._pos_blocks[pos] if self._pos_blocks else 0
            k = (block, self._monomial_key(exp), -pos)
            self._keys[term] = k
        return k

    def _term_degree(self, term):
        pos, exp = term
        shift = self._pos_degrees[pos] if self._pos_degrees else 0
        return self._ring.degree(exp) + shift

    def lead(self, vector):
        return max(vector, key=self.key)

    def _monic(self, vector):
        inverse = self._inverse(vector[self.lead(vector)])
        nrm = self._normalize
        return {t: nrm(c * inverse) for t, c in vector.items()}

    def _sugar(self, vector):
        return max(self._term_degree(t) for t in vector)

    def reduce(self, vector, reducers, full=True):
        """Reduces vector by the (monic) reducers; with full=False only the lead term is reduced."""
        by_position = {}
        for lead, reducer in reducers:
            by_position.setdefault(lead[0], []).append((lead[1], reducer))

        nrm = self._normalize
        key = self.key
        v = dict(vector)
        remainder = {}
        steps = 0

        while v:
            term = max(v, key=key)
            c = v[term]
            pos, exp = term

            for reducer_exp, reducer in by_position.get(pos, ()):
                if _divides(reducer_exp, exp):
                    shift = tuple(b - a for a, b in zip(reducer_exp, exp))
                    for (p, e), a in reducer.items():
                        target = (p, tuple(x + y for x, y in zip(e, shift)))
                        value = nrm(v.get(target, 0) - c * a)
                        if value:
                            v[target] = value
                        else:
                            v.pop(target, None)
                    break
            else:
                if not full:
                    return v
                remainder[term] = v.pop(term)

            steps += 1
            if self._deadline is not None and steps % 512 == 0:
                self._deadline.check_time()

        return remainder

    def _spoly(self, first, second, lcm_exp):
        (pos, exp1), v1 = first
        (_, exp2), v2 = second
        nrm = self._normalize
        shift1 = tuple(a - b for a, b in zip(lcm_exp, exp1))
        shift2 = tuple(a - b for a, b in zip(lcm_exp, exp2))

        result = {(p, tuple(x + y for x, y in zip(e, shift1))): c for (p, e), c in v1.items()}
        for (p, e), c in v2.items():
            target = (p, tuple(x + y for x, y in zip(e, shift2)))
            value = nrm(result.get(target, 0) - c)
            if value:
                result[target] = value
            else:
                result.pop(target, None)
        return result

    def _update(self, basis, active, pairs, vector, sugar):
        lead = self.lead(vector)
        index = len(basis)
        basis.append((lead, vector, sugar))
        pos, exp = lead

        candidates = []
        for g in active:
            g_pos, g_exp = basis[g][0]
            if g_pos != pos:
                continue
            lcm = _lcm(exp, g_exp)
            coprime = self._product_criterion and all(a == 0 or b == 0 for a, b in zip(exp, g_exp))
            candidates.append((g, lcm, coprime))

        kept = []
        for k, (g, lcm, coprime) in enumerate(candidates):
            if coprime:
                kept.append((g, lcm, coprime))
                continue
            dominated = any(_divides(other, lcm) for _, other, _ in candidates[k + 1:]) or \
                any(_divides(other, lcm) for _, other, _ in kept)
            if not dominated:
                kept.append((g, lcm, coprime))

        new_pairs = []
        degree = self._term_degree
        for g, lcm, coprime in kept:
            if coprime:
                continue
            g_lead, _, g_sugar = basis[g]
            lcm_term = (pos, lcm)
            pair_sugar = max(g_sugar - degree(g_lead), sugar - degree(lead)) + degree(lcm_term)
            new_pairs.append((pair_sugar, self.key(lcm_term), lcm_term, g, index))

        surviving = []
        for pair in pairs:
            _, _, (p_pos, p_lcm), i, j = pair
            if p_pos != pos or not _divides(exp, p_lcm) or \
                    _lcm(basis[i][0][1], exp) == p_lcm or _lcm(basis[j][0][1], exp) == p_lcm:
                surviving.append(pair)

        pairs[:] = surviving + new_pairs
        active[:] = [g for g in active if not (basis[g][0][0] == pos and _divides(exp, basis[g][0][1]))] + [index]

    def run(self, vectors):
        self._deadline = Budget.current().start()

        basis, active, pairs = [], [], []
        for vector in vectors:
            if vector:
                sugar = self._sugar(vector)
                self._deadline.check_degree(sugar)
                self._update(basis, active, pairs, self._monic(vector), sugar)

        treated = 0
        while pairs:
            pair = min(pairs)
            pairs.remove(pair)
            sugar, _, (_, lcm), i, j = pair

            self._deadline.check_degree(sugar)
            self._deadline.check_time()
            treated += 1

            s = self._spoly(basis[i][:2], basis[j][:2], lcm)
            h = self.reduce(s, [(basis[g][0], basis[g][1]) for g in active], full=False)
            if h:
                self._update(basis, active, pairs, self._monic(h), sugar)

        result = self._interreduce([basis[g] for g in active])
        _logger.debug('Buchberger: %d input vectors, %d pairs treated, %d basis elements'
                      % (len(vectors), treated, len(result)))
        return result

    def _interreduce(self, elements):
        elements = sorted(elements, key=lambda el: self.key(el[0]))

        minimal = []
        for lead, vector, _ in elements:
            if not any(m_lead[0] == lead[0] and _divides(m_lead[1], lead[1]) for m_lead, _ in minimal):
                minimal.append((lead, vector))

        reduced = []
        for i, (lead, vector) in enumerate(minimal):
            others = reduced[:i] + minimal[i + 1:]
            remainder = self.reduce(vector, others, full=True)
            reduced.append((lead, self._monic(remainder)))

        return [vector for _, vector in reduced]


def _to_vector(poly, position=0):
    return {(position, exp): c for exp, c in poly.items()}


def _from_vector(ring, vector):
    return Polynomial._raw(ring, {exp: c for (_, exp), c in vector.items()})


# ---- Ideals ----

class Ideal(object):
    def __init__(self, ring, gens=()):
        polys = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatch(ring, g.ring)
            if g:
                polys.append(g)

        self.ring = ring
        self.gens = tuple(polys)

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def is_zero(self):
        return not self.gens

    def groebner(self, order=None):
        return groebner_basis(self, order)

    def is_unit(self):
        return self.groebner().is_unit()

    def contains(self, f):
        return self.groebner().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def is_subset(self, other):
        """True when self ⊆ other."""
        gb = other.groebner()
        return all(gb.contains(g) for g in self.gens)

    def equals(self, other):
        return self.is_subset(other) and other.is_subset(self)

    def __add__(self, other):
        if other.ring != self.ring:
            raise RingMismatch(self.ring, other.ring)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        if other.ring != self.ring:
            raise RingMismatch(self.ring, other.ring)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def change_ring(self, ring):
        return Ideal(ring, [g.change_ring(ring) for g in self.gens])

    def minimal_generators(self):
        """Generators kept in degree order when not in the ideal of the previously kept ones."""
        kept = []
        for g in sorted(self.gens, key=lambda f: (f.degree(), self.ring.sort_key(f.lead_exponent))):
            if not kept or not Ideal(self.ring, kept).contains(g):
                kept.append(g)
        return Ideal(self.ring, kept)

    def __repr__(self):
        return 'Ideal(%s)' % ', '.join(str(g) for g in self.gens)


class GroebnerBasis(object):
    """Reduced Gröbner basis: monic, auto-reduced, sorted by ascending lead monomial."""

    def __init__(self, ideal, order, ring, basis):
        self.ideal = ideal
        self.order = order
        self.ring = ring
        self.basis = tuple(basis)
        self.lead_exponents = tuple(g.lead_exponent for g in self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def normal_form(self, f):
        return normal_form(f, self)

    def contains(self, f):
        return normal_form(f, self).is_zero()

    def __repr__(self):
        return 'GroebnerBasis(%s, order=%s)' % (', '.join(str(g) for g in self.basis), self.order)


def _gb_key(ideal, order=None):
    return hashkey(ideal.ring, ideal.gens, order)


_groebner_cache = cachetools.LRUCache(maxsize=1024)


def clear_cache():
    """Forgets every memoised Gröbner basis, so the next computation runs under the active budget."""
    _groebner_cache.clear()


@cachetools.cached(cache=_groebner_cache, key=_gb_key, lock=threading.RLock())
def groebner_basis(ideal, order=None):
    ring = ideal.ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
    gens = [g.change_ring(ring) for g in ideal.gens]

    engine = _Buchberger(ring)
    vectors = engine.run([_to_vector(g) for g in gens])
    return GroebnerBasis(ideal, ring.order, ring, [_from_vector(ring, v) for v in vectors])


def normal_form(f, gb):
    if f.ring.variables != gb.ring.variables or f.ring.field != gb.ring.field:
        raise RingMismatch(f.ring, gb.ring)

    g = f.change_ring(gb.ring)
    engine = _Buchberger(gb.ring)
    reducers = [((0, b.lead_exponent), _to_vector(b)) for b in gb.basis]
    remainder = engine.reduce(_to_vector(g), reducers, full=True)
    return _from_vector(gb.ring, remainder).change_ring(f.ring)


# ---- Derived ideal operations ----

def _variable_names(ring, variables):
    names = []
    for v in variables:
        if isinstance(v, Polynomial):
            support = v.support()
            if len(support) != 1 or len(v) != 1:
                raise ValueError('%s is not a variable' % v)
            v = support.pop()
        ring.index(v)
        names.append(v)
    return names


def eliminate(ideal, drop_vars):
    ring = ideal.ring
    drop = _variable_names(ring, drop_vars)
    if not drop:
        return ideal

    keep = [v for v in ring.variables if v not in drop]
    order = MonomialOrder.block(len(drop), MonomialOrder.grevlex(), MonomialOrder.grevlex())
    elim_ring = PolyRing(drop + keep, ring.field, [ring.degrees[ring.index(v)] for v in drop + keep], order)

    gb = groebner_basis(ideal.change_ring(elim_ring))
    k = len(drop)
    survivors = [g for g in gb.basis if all(not any(exp[:k]) for exp, _ in g.items())]
    return Ideal(ring, [g.change_ring(ring) for g in survivors])


def _with_auxiliary(ring, prefix):
    name = ring.fresh_names(prefix, 1)[0]
    return ring.extend([name], prepend=True), name


def intersect(first, second):
    ring = first.ring
    if second.ring != ring:
        raise RingMismatch(ring, second.ring)
    if first.is_zero() or second.is_zero():
        return Ideal(ring)

    aux_ring, name = _with_auxiliary(ring, 'w')
    w = aux_ring.gen(name)
    gens = [w * g.change_ring(aux_ring) for g in first.gens] + \
           [(1 - w) * g.change_ring(aux_ring) for g in second.gens]
    result = eliminate(Ideal(aux_ring, gens), [name])
    return Ideal(ring, [g.change_ring(ring) for g in result.gens])


def _quotient_by_element(ideal, f):
    meet = intersect(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [g.exact_quotient(f) for g in meet.gens])


def ideal_quotient(ideal, by):
    """J : I = {f : fI ⊆ J}."""
    if ideal.ring != by.ring:
        raise RingMismatch(ideal.ring, by.ring)

    gb = ideal.groebner()
    result = None
    for f in by.gens:
        if gb.contains(f):
            continue
        quotient = _quotient_by_element(ideal, f)
        result = quotient if result is None else intersect(result, quotient)

    return result if result is not None else Ideal.unit(ideal.ring)


def saturate(ideal, f):
    """J : f^∞ by the Rabinowitsch trick."""
    if f.is_zero():
        raise ValueError('cannot saturate by the zero polynomial')
    if f.ring != ideal.ring:
        raise RingMismatch(ideal.ring, f.ring)
    if f.is_constant():
        return Ideal(ideal.ring, ideal.groebner().basis)

    ring = ideal.ring
    aux_ring, name = _with_auxiliary(ring, 'u')
    u = aux_ring.gen(name)
    gens = [g.change_ring(aux_ring) for g in ideal.gens] + [u * f.change_ring(aux_ring) - 1]
    result = eliminate(Ideal(aux_ring, gens), [name])
    return Ideal(ring, [g.change_ring(ring) for g in result.gens])


def krull_dimension(ideal):
    """dim R/I from a maximal independent set of variables modulo the lead-term ideal; -1 for I = (1)."""
    gb = ideal.groebner()
    if gb.is_unit():
        return -1

    n = ideal.ring.ngens
    supports = [frozenset(i for i, e in enumerate(exp) if e) for exp in gb.lead_exponents]
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = frozenset(subset)
            if not any(support <= chosen for support in supports):
                return size
    return 0


def height(ideal):
    dim = krull_dimension(ideal)
    if dim < 0:
        return HEIGHT_INFINITY
    return ideal.ring.ngens - dim


def contains(ideal, f):
    return ideal.contains(f)


def ideal_equal(first, second):
    return first.equals(second)


# ---- Submodules of free modules ----

class ModuleGroebnerBasis(object):
    """Reduced Gröbner basis of a submodule of R^rank given by columns (tuples of polynomials).

    position_blocks lets a range of positions dominate the others (position-over-term across blocks),
    which is how kernels are extracted by elimination.
    """

    def __init__(self, ring, rank, columns, position_degrees=None, position_blocks=None):
        self.ring = ring
        self.rank = rank
        self._engine = _Buchberger(ring, position_degrees, position_blocks, module=True)

        vectors = [self._to_vector(column) for column in columns]
        self._vectors = self._engine.run([v for v in vectors if v])
        self.basis = tuple(self._to_column(v) for v in self._vectors)

    def _to_vector(self, column):
        if len(column) != self.rank:
            raise ValueError('Expected a column of length %d, found %d' % (self.rank, len(column)))
        vector = {}
        for pos, entry in enumerate(column):
            for exp, c in entry.items():
                vector[(pos, exp)] = c
        return vector

    def _to_column(self, vector):
        entries = [{} for _ in range(self.rank)]
        for (pos, exp), c in vector.items():
            entries[pos][exp] = c
        return tuple(Polynomial._raw(self.ring, e) for e in entries)

    def normal_form(self, column):
        reducers = [(self._engine.lead(v), v) for v in self._vectors]
        return self._to_column(self._engine.reduce(self._to_vector(column), reducers, full=True))

    def contains(self, column):
        return all(entry.is_zero() for entry in self.normal_form(column))

    def __len__(self):
        return len(self.basis)
