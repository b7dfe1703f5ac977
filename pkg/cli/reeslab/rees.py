import itertools
import logging

import numpy as np

from cli.reeslab import DEFAULT_SEED, ReesLabError
from cli.reeslab.groebner import Ideal, ideal_quotient, krull_dimension, saturate
from cli.reeslab.modules import Matrix, PresentedModule, fitting_ideal, module_rank, projective_dimension, prune
from cli.reeslab.polynomials import PolyRing, Polynomial

_logger = logging.getLogger('rees')

PROBABILISTIC = 'probabilistic'


class NoRank(ReesLabError):
    def __init__(self):
        super().__init__('the Rees algebra is defined for modules of positive rank only')


class SaturationFailure(ReesLabError):
    def __init__(self, index):
        super().__init__('Fitt_%d is zero: no saturating element available' % index, fitting_index=index)


class NotAReduction(ReesLabError):
    def __init__(self, r_max, seeds):
        super().__init__('no reduction with reduction number <= %d found (seeds %s)' % (r_max, seeds),
                         r_max=r_max, seeds=str(seeds))
        self.r_max = r_max
        self.seeds = seeds


class GradedQuotientAlgebra(object):
    """A quotient k[x, t1..tn]/J, bigraded by x-degree and t-degree."""

    def __init__(self, base, ring, t_names, defining_ideal):
        self.base = base
        self.ring = ring
        self.t_names = tuple(t_names)
        self.defining_ideal = defining_ideal
        self._t_positions = tuple(ring.index(name) for name in self.t_names)

    @property
    def t_count(self):
        return len(self.t_names)

    def t_degree(self, exp):
        return sum(exp[i] for i in self._t_positions)

    def t_components(self, f):
        """Splits f by t-degree: {k: f_k}."""
        parts = {}
        for exp, c in f.items():
            parts.setdefault(self.t_degree(exp), {})[exp] = c
        return {k: Polynomial._raw(self.ring, terms) for k, terms in parts.items()}

    def is_subset(self, other):
        return self.defining_ideal.is_subset(other.defining_ideal)

    def dimension(self):
        return krull_dimension(self.defining_ideal)

    def __repr__(self):
        return 'GradedQuotientAlgebra(%s / (%s))' % (self.ring, ', '.join(str(g) for g in self.defining_ideal.gens))


class ReesPackage(object):
    """S(E), R(E) = S(E)/T_R and the data used to pass from one to the other.

    torsion_ideal is the preimage of T_R in k[x, t]; correction holds its generators outside the
    symmetric ideal (empty exactly when E is of linear type).
    """

    def __init__(self, module, rank, sym, rees, saturating_element, correction):
        self.module = module
        self.rank = rank
        self.sym = sym
        self.rees = rees
        self.saturating_element = saturating_element
        self.correction = tuple(correction)

    @property
    def torsion_ideal(self):
        return self.rees.defining_ideal

    @property
    def ring(self):
        return self.rees.ring

    @property
    def t_names(self):
        return self.rees.t_names


def _t_degrees(module):
    if not module.n:
        return ()
    if not module.graded:
        return (1,) * module.n
    low = min(module.row_degrees)
    return tuple(d - low + 1 for d in module.row_degrees)


def symmetric_algebra(module):
    """S(E) = R[t]/(t·phi), one linear form in t per column of phi."""
    base = module.ring
    names = base.fresh_names('t', module.n)
    ring = base.extend(names, _t_degrees(module))
    ts = [ring.gen(name) for name in names]

    gens = []
    for column in module.phi.columns():
        form = ring.zero()
        for t, entry in zip(ts, column):
            if entry:
                form = form + t * entry.change_ring(ring)
        gens.append(form)

    return GradedQuotientAlgebra(base, ring, names, Ideal(ring, gens))


def rees_algebra(module, minimize=True):
    """R(E) from S(E) by saturating with a nonzero element of Fitt_e(E).

    E is free after inverting any nonzero a in Fitt_e(E), so the R-torsion of S(E) is 0 : a^∞.
    """
    if minimize:
        module = prune(module)

    rank = module_rank(module)
    if rank == 0:
        raise NoRank()

    sym = symmetric_algebra(module)
    fitting = fitting_ideal(module, rank)
    candidates = sorted(fitting.gens, key=lambda f: (f.degree(), module.ring.sort_key(f.lead_exponent)))
    if not candidates:
        raise SaturationFailure(rank)

    a = candidates[0]
    _logger.info('Saturating the symmetric ideal by %s' % a)
    rees_ideal = saturate(sym.defining_ideal, a.change_ring(sym.ring))

    sym_gb = sym.defining_ideal.groebner()
    correction = [g for g in rees_ideal.gens if not sym_gb.contains(g)]
    rees = GradedQuotientAlgebra(sym.base, sym.ring, sym.t_names, rees_ideal)

    _logger.info('Rees algebra: %d symmetric relations, %d torsion corrections'
                 % (len(sym.defining_ideal), len(correction)))
    return ReesPackage(module, rank, sym, rees, a, correction)


def is_linear_type(package):
    return not package.correction


def _t_monomials(count, degree):
    for combination in itertools.combinations_with_replacement(range(count), degree):
        exp = [0] * count
        for i in combination:
            exp[i] += 1
        yield tuple(exp)


def power_component(package, n):
    """E^n = [R(E)]_n presented on the t-monomials of degree n."""
    if n < 1:
        raise ValueError('Power must be at least 1')

    rees = package.rees
    base = rees.base
    ring = rees.ring
    module = package.module
    positions = [ring.index(name) for name in rees.t_names]
    x_positions = [ring.index(name) for name in base.variables]
    count = len(positions)

    basis = list(_t_monomials(count, n))
    index = {beta: k for k, beta in enumerate(basis)}
    twists = [sum(b * d for b, d in zip(beta, module.row_degrees)) for beta in basis] if module.graded else None

    columns = []
    for g in rees.defining_ideal.gens:
        for k, component in rees.t_components(g).items():
            if k > n:
                continue
            for gamma in _t_monomials(count, n - k):
                entries = [{} for _ in basis]
                for exp, c in component.items():
                    beta = tuple(exp[p] + s for p, s in zip(positions, gamma))
                    entries[index[beta]][tuple(exp[p] for p in x_positions)] = c
                column = [Polynomial._raw(base, terms) for terms in entries]
                if any(column):
                    columns.append(column)

    power = PresentedModule(base, Matrix.from_columns(base, columns, len(basis)), twists, module.graded)
    _logger.debug('E^%d: %d generators, %d relations before pruning' % (n, len(basis), len(columns)))
    return prune(power)


def special_fiber(package):
    """F(E) = R(E)/mR(E) as a quotient of k[t], every t of degree one.

    Setting the x-variables to zero in the Rees ideal gives (J + (x)) ∩ k[t].
    """
    rees = package.rees
    zero = {name: 0 for name in rees.base.variables}
    fiber_ring = PolyRing(rees.t_names, rees.ring.field)
    gens = [g.substitute(zero).change_ring(fiber_ring) for g in rees.defining_ideal.gens]
    base = PolyRing((), rees.ring.field)
    return GradedQuotientAlgebra(base, fiber_ring, rees.t_names, Ideal(fiber_ring, gens))


def analytic_spread(package):
    return krull_dimension(special_fiber(package).defining_ideal)


class ReductionNumber(object):
    def __init__(self, value, seed, attempts, status=PROBABILISTIC):
        self.value = value
        self.seed = seed
        self.attempts = tuple(attempts)
        self.status = status

    def to_json(self):
        return {'value': self.value, 'status': self.status, 'seed': self.seed}

    def __repr__(self):
        return 'ReductionNumber(%d, %s, seed=%d)' % (self.value, self.status, self.seed)


def _vanishing_degree(gb, count, r_max):
    """Least r <= r_max such that every t-monomial of degree r + 1 lies in the lead-term ideal."""
    leads = gb.lead_exponents
    for r in range(r_max + 1):
        if all(any(all(a <= b for a, b in zip(lead, exp)) for lead in leads) for exp in _t_monomials(count, r + 1)):
            return r
    return None


def reduction_number(package, seed=DEFAULT_SEED, r_max=None, retries=3):
    """r_U(E) for U generated by l random combinations of the generators, minimised over seeds.

    With F = F(E), r_U(E) is the top degree of F/UF, read off the lead terms of a Gröbner basis.
    """
    fiber = special_fiber(package)
    spread = krull_dimension(fiber.defining_ideal)
    count = fiber.t_count
    if r_max is None:
        r_max = max(spread - package.rank + 2, 0)

    ring = fiber.ring
    field = ring.field
    best = None
    attempts = []
    for attempt in range(retries):
        rng = np.random.default_rng([seed, attempt])
        forms = []
        for _ in range(spread):
            form = ring.zero()
            for t in ring.gens():
                form = form + t.scale(field.random_element(rng))
            forms.append(form)

        r = _vanishing_degree(Ideal(ring, fiber.defining_ideal.gens + tuple(forms)).groebner(), count, r_max)
        _logger.info('Reduction number with seed %d attempt %d: %s' % (seed, attempt, r))
        attempts.append((seed, attempt))
        if r is not None and (best is None or r < best):
            best = r

    if best is None:
        raise NotAReduction(r_max, attempts)
    return ReductionNumber(best, seed, attempts)


class ReesCMResult(object):
    def __init__(self, is_cm, depth, dim):
        self.is_cm = is_cm
        self.depth = depth
        self.dim = dim

    def to_json(self):
        return {'is_cm': self.is_cm, 'depth': self.depth, 'dim': self.dim}

    def __repr__(self):
        return 'ReesCMResult(is_cm=%s, depth=%d, dim=%d)' % (self.is_cm, self.depth, self.dim)


def rees_cm_test(package):
    """Cohen-Macaulayness of R(E) = k[x, t]/J: depth from the resolution of k[x, t]/J, compared with dim."""
    ideal = package.rees.defining_ideal
    ring = package.rees.ring
    dim = krull_dimension(ideal)
    depth = ring.ngens - projective_dimension(PresentedModule.cyclic(ideal))
    _logger.info('Rees algebra: dim %d, depth %d' % (dim, depth))
    return ReesCMResult(depth == dim, depth, dim)


def regular_sequence_on_rees(package, elements):
    """True when the t-linear forms in elements are a regular sequence on R(E)."""
    ring = package.rees.ring
    current = package.rees.defining_ideal
    for element in elements:
        element = element.change_ring(ring)
        colon = ideal_quotient(current, Ideal(ring, [element]))
        if not colon.is_subset(current):
            return False
        current = current + Ideal(ring, [element])
    return not current.is_unit()


def linear_forms(package, coefficients):
    """Linear forms sum_i c_i t_i in the Rees ring for coefficient vectors over the generators."""
    ring = package.rees.ring
    ts = [ring.gen(name) for name in package.rees.t_names]
    forms = []
    for vector in coefficients:
        form = ring.zero()
        for t, c in zip(ts, vector):
            if isinstance(c, Polynomial):
                form = form + t * c.change_ring(ring)
            else:
                form = form + t.scale(c)
        forms.append(form)
    return forms
