import copy
import logging
import math
from collections import defaultdict

import cachetools
import numpy as np

from cli.reeslab import ReesLabError, jsonable
from cli.reeslab.bourbaki import RANDOM, SYMBOLIC, generic_bourbaki, stable_bourbaki_height
from cli.reeslab.config import AnalysisOptions
from cli.reeslab.groebner import BudgetExceeded, Ideal, ideal_quotient, krull_dimension, height
from cli.reeslab.modules import PresentedModule, ZeroModule, annihilator, depth, dual_module, exterior_power, \
    ext_module, fitting_ideal, grade_of_module, gs_violation, is_torsion_free, koszul_homology, module_rank, \
    projective_dimension, prune, torsion_submodule
from cli.reeslab.rees import analytic_spread, is_linear_type, power_component, reduction_number, rees_algebra, \
    rees_cm_test

_logger = logging.getLogger('checker')

INF = math.inf

HOLDS = 'holds'
FAILS = 'fails'
PROBABLY_HOLDS = 'probabilistic-holds'
NOT_COMPUTABLE = 'not-computable'
NOT_APPLICABLE = 'not-applicable'

THEOREMS = ('linear', 'cm', 'minrank', 'cm2', 'cm3')
ALL_THEOREMS = THEOREMS + ('ideal_cm',)


class HypothesisVerdict(object):
    def __init__(self, name, status, witness=None, value=None):
        if status == FAILS and witness is None:
            raise ValueError('A failing verdict needs a witness (%s)' % name)

        self.name = name
        self.status = status
        self.witness = witness
        self.value = value

    @property
    def passed(self):
        return self.status in (HOLDS, PROBABLY_HOLDS)

    def to_json(self):
        obj = {'name': self.name, 'status': self.status}
        if self.witness is not None:
            obj['witness'] = jsonable(self.witness)
        if self.value is not None:
            obj['value'] = jsonable(self.value)
        return obj

    def __repr__(self):
        return 'HypothesisVerdict(%s: %s, witness=%s)' % (self.name, self.status, self.witness)


class TheoremReport(object):
    """Hypothesis verdicts of one theorem next to a direct computation of its conclusion.

    consistent is False only when every hypothesis passed and the direct computation contradicts the
    conclusion, which can only come from a bug.
    """

    def __init__(self, theorem_id, hypotheses, conclusion, direct, related=None):
        self.theorem_id = theorem_id
        self.hypotheses = list(hypotheses)
        self.conclusion = dict(conclusion)
        self.direct = direct
        self.related = related or {}

    @property
    def status(self):
        statuses = {h.status for h in self.hypotheses}
        for status in (NOT_APPLICABLE, FAILS, NOT_COMPUTABLE):
            if status in statuses:
                return status
        return PROBABLY_HOLDS if PROBABLY_HOLDS in statuses else HOLDS

    @property
    def all_hold(self):
        return all(h.passed for h in self.hypotheses)

    @property
    def consistent(self):
        if not self.all_hold or self.direct.get('status') == NOT_COMPUTABLE:
            return True
        for key, expected in self.conclusion.items():
            if key in self.direct and self.direct[key] != expected:
                return False
        agreement = self.related.get('rees_cm_agrees')
        return agreement is not False

    def verdict(self, name):
        return next((h for h in self.hypotheses if h.name == name), None)

    def to_json(self):
        return {
            'theorem': self.theorem_id,
            'status': self.status,
            'hypotheses': [h.to_json() for h in self.hypotheses],
            'conclusion': dict(self.conclusion),
            'direct_verification': jsonable(self.direct),
            'related': jsonable(self.related),
            'consistent': self.consistent,
        }

    def __repr__(self):
        return 'TheoremReport(%s: %s, consistent=%s)' % (self.theorem_id, self.status, self.consistent)


def _cache(name):
    return cachetools.cachedmethod(lambda self: self._caches[name])


class ModuleProfile(object):
    """Invariants of one module, computed on demand and cached for the checkers that share them.

    module is kept as given (generator indices of U refer to it); invariants use its minimal presentation.
    """

    def __init__(self, module, options=None):
        self.module = module
        self.options = options or AnalysisOptions()
        self.pruned = prune(module)
        self._caches = defaultdict(lambda: cachetools.LRUCache(maxsize=64))

    @property
    def ring(self):
        return self.module.ring

    @property
    def d(self):
        return self.module.ring.ngens

    @_cache('rank')
    def rank(self):
        return module_rank(self.pruned)

    def mu(self):
        return self.pruned.n

    @_cache('fitting')
    def fitting(self, i):
        return fitting_ideal(self.pruned, i)

    @_cache('fitting_height')
    def fitting_height(self, i):
        return height(self.fitting(i))

    @_cache('torsion_free')
    def torsion_free(self):
        return is_torsion_free(self.pruned)

    @_cache('depth')
    def depth(self):
        return depth(self.pruned)

    @_cache('rees')
    def rees(self):
        return rees_algebra(self.pruned)

    @_cache('spread')
    def spread(self):
        return analytic_spread(self.rees())

    @_cache('reduction')
    def reduction(self):
        return reduction_number(self.rees(), self.options.seed, r_max=self.options.r_max,
                                retries=self.options.reduction_retries)

    @_cache('power')
    def power(self, n):
        return power_component(self.rees(), n)

    @_cache('power_depth')
    def power_depth(self, n):
        return depth(self.power(n))

    @_cache('linear_type')
    def linear_type(self):
        return is_linear_type(self.rees())

    @_cache('rees_cm')
    def rees_cm(self):
        return rees_cm_test(self.rees())

    @_cache('bourbaki')
    def bourbaki(self, subset=None, mode=None):
        options = self.options
        return generic_bourbaki(self.module, subset, mode or options.bourbaki_mode, options.seed,
                                options.bourbaki_retries)

    @_cache('bourbaki_height')
    def bourbaki_height(self, subset=None):
        """Height of the generic Bourbaki ideal; in random mode it must agree across consecutive seeds."""
        options = self.options
        if options.bourbaki_mode == SYMBOLIC or self.rank() < 2:
            return self.bourbaki(subset).height
        h, _ = stable_bourbaki_height(self.module, subset, options.seed, options.stability_seeds,
                                      options.bourbaki_retries)
        return h


def _profile(module, options=None):
    if isinstance(module, ModuleProfile):
        return module
    if isinstance(module, Ideal):
        module = PresentedModule.from_ideal(module)
    return ModuleProfile(module, options)


def _g_name(s):
    return 'G_inf' if s == INF else 'G_%d' % s


# ---- Conditions on modules and ideals ----

def check_Gs(module, s):
    """G_s via heights of Fitting ideals; G_inf is G_{d+1}."""
    profile = _profile(module)
    name = _g_name(s)
    violation = gs_violation(profile.pruned, s, profile.rank(), profile.fitting_height)
    if violation is None:
        return HypothesisVerdict(name, HOLDS)

    j, index, h = violation
    return HypothesisVerdict(name, FAILS, witness={'prime_height': j, 'fitting_index': index,
                                                   'fitting_height': h, 'required': j + 1})


def check_Fs(module, s):
    """F_s: mu(E_P) <= e + ht P - s wherever E_P is not free, read off ht Fitt_{max(e, e+h-s)} >= h + 1."""
    profile = _profile(module)
    e = profile.rank()
    for h in range(1, profile.d + 1):
        index = max(e, e + h - s)
        fh = profile.fitting_height(index)
        if fh < h + 1:
            return HypothesisVerdict('F_%d' % s, FAILS, witness={'prime_height': h, 'fitting_index': index,
                                                                 'fitting_height': fh, 'required': h + 1})
    return HypothesisVerdict('F_%d' % s, HOLDS)


def check_orientable(module):
    """(∧^e E)** is cyclic and torsion-free, hence R."""
    profile = _profile(module)
    e = profile.rank()
    if e < 1:
        return HypothesisVerdict('orientable', NOT_APPLICABLE, witness={'rank': e})

    double_dual = dual_module(dual_module(exterior_power(profile.pruned, e)))
    mu = double_dual.n
    if mu != 1:
        return HypothesisVerdict('orientable', FAILS, witness={'mu_double_dual': mu})
    if not torsion_submodule(double_dual).is_zero():
        return HypothesisVerdict('orientable', FAILS, witness={'reason': 'torsion in the double dual'})
    return HypothesisVerdict('orientable', HOLDS)


def check_torsion_free(module):
    profile = _profile(module)
    if not profile.torsion_free():
        return HypothesisVerdict('torsion_free', FAILS, witness={'reason': 'torsion'})
    return HypothesisVerdict('torsion_free', HOLDS)


def check_ideal_module(module):
    """E nonzero, torsion-free, with E** free."""
    profile = _profile(module)
    if profile.pruned.n == 0:
        return HypothesisVerdict('ideal_module', FAILS, witness={'reason': 'zero module'})
    if not profile.torsion_free():
        return HypothesisVerdict('ideal_module', FAILS, witness={'reason': 'torsion'})

    double_dual = dual_module(dual_module(profile.pruned))
    pd = projective_dimension(double_dual)
    if pd != 0 or double_dual.n != profile.rank():
        return HypothesisVerdict('ideal_module', FAILS, witness={'reason': 'double dual is not free', 'pd': pd,
                                                                 'mu': double_dual.n})
    return HypothesisVerdict('ideal_module', HOLDS)


def check_free_in_codim(module, c):
    """E_P free for ht P <= c, i.e. ht Fitt_e(E) >= c + 1."""
    profile = _profile(module)
    h = profile.fitting_height(profile.rank())
    name = 'free_in_codim_%d' % c
    if h < c + 1:
        return HypothesisVerdict(name, FAILS, witness={'fitting_height': h, 'required': c + 1})
    return HypothesisVerdict(name, HOLDS, value=h)


def check_sliding_depth(ideal):
    """depth H_i >= d - n + i for every nonzero Koszul homology module of the generating sequence."""
    d = ideal.ring.ngens
    n = len(ideal.gens)
    depths = {}
    for i, h in enumerate(koszul_homology(ideal)):
        if h.is_zero():
            continue
        depths[i] = depth(h)
        if depths[i] < d - n + i:
            return HypothesisVerdict('sliding_depth', FAILS, witness={'i': i, 'depth': depths[i],
                                                                      'required': d - n + i})
    return HypothesisVerdict('sliding_depth', HOLDS, value=depths)


def _monomials_of_degree(ring, degree, start=0):
    if degree == 0:
        yield (0,) * (ring.ngens - start)
        return
    if start == ring.ngens:
        return
    weight = ring.degrees[start]
    for power in range(degree // weight, -1, -1):
        for rest in _monomials_of_degree(ring, degree - power * weight, start + 1):
            yield (power,) + rest


def _generic_elements(ideal, count, rng):
    """count random combinations of the generators, homogeneous of the top generator degree when possible."""
    ring = ideal.ring
    field = ring.field
    gens = list(ideal.gens)
    graded = all(g.is_homogeneous() for g in gens)
    top = max(g.degree() for g in gens) if graded else None

    elements = []
    for _ in range(count):
        element = ring.zero()
        for g in gens:
            if graded:
                multiplier = ring.zero()
                for exp in _monomials_of_degree(ring, top - g.degree()):
                    multiplier = multiplier + ring.monomial(exp, field.random_element(rng))
            else:
                multiplier = ring.constant(field.random_element(rng))
            element = element + multiplier * g
        elements.append(element)
    return elements


def check_ANs(ideal, s, seed):
    """AN_s on links J : I of random J with mu(J) <= i <= ht(J : I), i = 1..s.

    A failure on generic choices disproves the property; passing is only probabilistic.
    """
    if not ideal.gens:
        return HypothesisVerdict('AN_%d' % s, PROBABLY_HOLDS, witness={'seed': seed})

    tested = []
    for i in range(1, s + 1):
        rng = np.random.default_rng([seed, i])
        links = Ideal(ideal.ring, _generic_elements(ideal, i, rng))
        link = ideal_quotient(links, ideal)
        h = height(link)
        if h == INF or h < i:
            continue

        dim = krull_dimension(link)
        link_depth = ideal.ring.ngens - projective_dimension(PresentedModule.cyclic(link))
        if link_depth != dim:
            _logger.info('AN_%d fails at i=%d (seed %d): depth %d, dim %d' % (s, i, seed, link_depth, dim))
            return HypothesisVerdict('AN_%d' % s, FAILS, witness={'i': i, 'seed': seed, 'depth': link_depth,
                                                                  'dim': dim})
        tested.append(i)
    return HypothesisVerdict('AN_%d' % s, PROBABLY_HOLDS, witness={'seed': seed}, value={'tested': tested})


# ---- Shared clauses of the theorems ----

def check_depth_chain(module, bound, last, name='depth_powers'):
    """depth E^n >= bound(n) for 1 <= n <= last."""
    profile = _profile(module)
    depths = {}
    if last == -INF:
        last = 0
    for n in range(1, last + 1):
        depths[n] = profile.power_depth(n)
        if depths[n] < bound(n):
            return HypothesisVerdict(name, FAILS, witness={'n': n, 'depth': depths[n], 'required': bound(n)},
                                     value=depths)
    return HypothesisVerdict(name, HOLDS, value=depths)


def check_bourbaki_height(module, at_least, subset=None, name='bourbaki_height'):
    profile = _profile(module)
    g = profile.bourbaki_height(subset)
    witness = {'height': g, 'required': at_least}
    if profile.options.bourbaki_mode == RANDOM:
        witness['seed'] = profile.options.seed
    if g < at_least:
        return HypothesisVerdict(name, FAILS, witness=witness)
    return HypothesisVerdict(name, HOLDS, value=g)


def check_reduction_bound(module, low, high, name='reduction_number'):
    """low <= r(E) <= high with r(E) from seeded random reductions."""
    profile = _profile(module)
    r = profile.reduction()
    witness = {'reduction_number': r.value, 'low': low, 'high': high, 'seed': r.seed}
    if not low <= r.value <= high:
        return HypothesisVerdict(name, FAILS, witness=witness)
    return HypothesisVerdict(name, PROBABLY_HOLDS, witness={'seed': r.seed}, value=r.value)


class _Hypotheses(object):
    """Collects verdicts; a computation that cannot finish becomes not-computable, never a pass."""

    def __init__(self, theorem_id):
        self.theorem_id = theorem_id
        self.verdicts = []

    def check(self, name, function, *args, **kwargs):
        try:
            verdict = function(*args, **kwargs)
        except BudgetExceeded as e:
            verdict = HypothesisVerdict(name, NOT_COMPUTABLE, witness={'budget': e.budget, 'limit': e.limit})
        except ReesLabError as e:
            verdict = HypothesisVerdict(name, NOT_COMPUTABLE, witness={'error': type(e).__name__,
                                                                      'message': str(e)})
        verdict.name = name
        return self.add(verdict)

    def value(self, name, function, *args):
        """Records a computed quantity as a holding verdict and returns it (None when not computable)."""
        verdict = self.check(name, lambda: HypothesisVerdict(name, HOLDS, value=function(*args)))
        return verdict.value if verdict.status == HOLDS else None

    def add(self, verdict):
        _logger.info('[%s] %s: %s%s' % (self.theorem_id, verdict.name, verdict.status,
                                        ' (%s)' % verdict.witness if verdict.witness is not None else ''))
        self.verdicts.append(verdict)
        return verdict

    def not_applicable(self, name, **witness):
        return self.add(HypothesisVerdict(name, NOT_APPLICABLE, witness=witness))

    def not_computable(self, name, missing):
        return self.add(HypothesisVerdict(name, NOT_COMPUTABLE, witness={'missing': missing}))


def direct_verification(module):
    """is_linear_type and rees_cm_test on E itself, independent of any hypothesis."""
    profile = _profile(module)
    try:
        cm = profile.rees_cm()
        return {'linear_type': profile.linear_type(), 'rees_cm': cm.is_cm, 'rees_depth': cm.depth,
                'rees_dim': cm.dim}
    except BudgetExceeded as e:
        return {'status': NOT_COMPUTABLE, 'budget': e.budget}
    except ReesLabError as e:
        return {'status': NOT_COMPUTABLE, 'error': type(e).__name__, 'message': str(e)}


def _report(theorem_id, hypotheses, conclusion, profile, related=None):
    report = TheoremReport(theorem_id, hypotheses.verdicts, conclusion, direct_verification(profile), related)
    if not report.consistent:
        _logger.error('[%s] every hypothesis holds but the direct computation gives %s'
                      % (theorem_id, report.direct))
    elif not report.all_hold:
        _logger.info('[%s] hypotheses do not all hold; direct computation: %s' % (theorem_id, report.direct))
    return report


def _gorenstein(hypotheses):
    hypotheses.add(HypothesisVerdict('gorenstein_base', HOLDS, value='polynomial ring'))


# ---- Theorems ----

def check_theorem_linear(module, options=None):
    """Orientable, G_inf, grade I >= 2 and depth E^n >= d - n for 1 <= n <= l - e give linear type and CM."""
    profile = _profile(module, options)
    hypotheses = _Hypotheses('linear')
    conclusion = {'linear_type': True, 'rees_cm': True}

    e = profile.rank()
    if e < 1:
        hypotheses.not_applicable('rank', rank=e)
        return _report('linear', hypotheses, conclusion, profile)

    _gorenstein(hypotheses)
    hypotheses.check('orientable', check_orientable, profile)
    hypotheses.check('G_inf', check_Gs, profile, INF)
    hypotheses.check('grade_bourbaki', check_bourbaki_height, profile, 2)

    l = hypotheses.value('analytic_spread', profile.spread)
    d = profile.d
    if l is None:
        hypotheses.not_computable('depth_powers', 'analytic_spread')
    else:
        hypotheses.check('depth_powers', check_depth_chain, profile, lambda n: d - n, l - e)
    return _report('linear', hypotheses, conclusion, profile)


def check_theorem_cm(module, options=None):
    """Torsion-free orientable E with G_{l-e+1}, Bourbaki height g >= 2, r(E) <= l - g - e + 1 and
    depth E^n >= d - g - n + 2 for 1 <= n <= l - e - g + 1 has a Cohen-Macaulay Rees algebra.
    """
    profile = _profile(module, options)
    hypotheses = _Hypotheses('cm')
    conclusion = {'rees_cm': True}
    related = {}

    e = profile.rank()
    if e < 1:
        hypotheses.not_applicable('rank', rank=e)
        return _report('cm', hypotheses, conclusion, profile)

    l = hypotheses.value('analytic_spread', profile.spread)
    if l is None:
        return _report('cm', hypotheses, conclusion, profile)
    if l - e + 1 < 2:
        hypotheses.not_applicable('spread_guard', analytic_spread=l, rank=e, required='l - e + 1 >= 2')
        return _report('cm', hypotheses, conclusion, profile)

    _gorenstein(hypotheses)
    hypotheses.check('torsion_free', check_torsion_free, profile)
    hypotheses.check('orientable', check_orientable, profile)
    hypotheses.check(_g_name(l - e + 1), check_Gs, profile, l - e + 1)
    verdict = hypotheses.check('bourbaki_height', check_bourbaki_height, profile, 2)

    d = profile.d
    if verdict.status == NOT_COMPUTABLE:
        hypotheses.not_computable('reduction_number', 'bourbaki_height')
        hypotheses.not_computable('depth_powers', 'bourbaki_height')
        return _report('cm', hypotheses, conclusion, profile)

    g = verdict.value if verdict.passed else verdict.witness['height']
    hypotheses.check('reduction_number', check_reduction_bound, profile, 0, l - g - e + 1)
    hypotheses.check('depth_powers', check_depth_chain, profile, lambda n: d - g - n + 2, l - e - g + 1)

    if g >= 3:
        related = _ideal_branch(profile)
    return _report('cm', hypotheses, conclusion, profile, related)


def _ideal_branch(profile):
    """Runs the ideal case on a random Bourbaki ideal; R(E) and R(I) must agree on Cohen-Macaulayness."""
    try:
        result = profile.bourbaki(mode=RANDOM)
    except ReesLabError as e:
        return {'ideal_cm': {'status': NOT_COMPUTABLE, 'error': type(e).__name__, 'message': str(e)}}

    ideal_options = copy.copy(profile.options)
    ideal_options.bourbaki_mode = RANDOM
    ideal_report = check_cor_ideal_cm(result.ideal, ideal_options)
    related = {'ideal_cm': ideal_report, 'seed': result.seed}

    own = direct_verification(profile)
    if 'rees_cm' in own and 'rees_cm' in ideal_report.direct:
        related['rees_cm_agrees'] = own['rees_cm'] == ideal_report.direct['rees_cm']
    return related


def check_prop_minrank(module, options=None):
    """G_inf, mu(E) <= min(e + 3, d + e - 1) and depth E >= d - 1 give linear type and CM."""
    profile = _profile(module, options)
    hypotheses = _Hypotheses('minrank')
    conclusion = {'linear_type': True, 'rees_cm': True}

    e = profile.rank()
    if e < 1:
        hypotheses.not_applicable('rank', rank=e)
        return _report('minrank', hypotheses, conclusion, profile)

    d = profile.d
    hypotheses.check('G_inf', check_Gs, profile, INF)

    mu, bound = profile.mu(), min(e + 3, d + e - 1)
    if mu > bound:
        hypotheses.add(HypothesisVerdict('mu_bound', FAILS, witness={'mu': mu, 'bound': bound}))
    else:
        hypotheses.add(HypothesisVerdict('mu_bound', HOLDS, value=mu))

    def depth_bound():
        value = profile.depth()
        if value < d - 1:
            return HypothesisVerdict('depth', FAILS, witness={'depth': value, 'required': d - 1})
        return HypothesisVerdict('depth', HOLDS, value=value)

    hypotheses.check('depth', depth_bound)
    return _report('minrank', hypotheses, conclusion, profile)


def _quotient_grade(profile, subset, expected):
    quotient = profile.module.quotient_by_generators(subset)
    try:
        grade = grade_of_module(quotient)
    except ZeroModule:
        grade = INF
    if grade != expected:
        return HypothesisVerdict('grade_quotient', FAILS, witness={'grade': grade, 'required': expected})
    return HypothesisVerdict('grade_quotient', HOLDS, value=grade)


def _s_value(profile, s, hypotheses):
    if s is not None:
        return s
    if profile.options.s is not None:
        return profile.options.s
    verdict = hypotheses.check('s_default', lambda: HypothesisVerdict('s_default', HOLDS,
                                                                     value=profile.reduction().value))
    return verdict.value if verdict.status == HOLDS else None


def check_cor_cm2(module, subset=None, s=None, options=None):
    """Ideal module E with U, grade E/U = l - e - 1 >= 2, free in codimension l - e - 2, 1 <= r(E) <= s and
    depth E^n >= d - (l - e + 1) + s - n + 1 for 1 <= n <= s has a Cohen-Macaulay Rees algebra.
    """
    profile = _profile(module, options)
    hypotheses = _Hypotheses('cm2')
    conclusion = {'rees_cm': True}

    e = profile.rank()
    if e < 1:
        hypotheses.not_applicable('rank', rank=e)
        return _report('cm2', hypotheses, conclusion, profile)

    l = hypotheses.value('analytic_spread', profile.spread)
    if l is None:
        return _report('cm2', hypotheses, conclusion, profile)
    if l - e - 1 < 2:
        hypotheses.not_applicable('spread_guard', analytic_spread=l, rank=e, required='l - e - 1 >= 2')
        return _report('cm2', hypotheses, conclusion, profile)
    if not subset:
        hypotheses.not_applicable('submodule', reason='no submodule U given')
        return _report('cm2', hypotheses, conclusion, profile)

    d = profile.d
    subset = tuple(sorted(subset))
    hypotheses.check('ideal_module', check_ideal_module, profile)
    hypotheses.check(_g_name(l - e + 1), check_Gs, profile, l - e + 1)
    hypotheses.check('grade_quotient', _quotient_grade, profile, subset, l - e - 1)
    hypotheses.check('free_in_codim', check_free_in_codim, profile, l - e - 2)

    s = _s_value(profile, s, hypotheses)
    if s is None:
        hypotheses.not_computable('depth_powers', 's')
        return _report('cm2', hypotheses, conclusion, profile)
    hypotheses.check('reduction_number', check_reduction_bound, profile, 1, s)
    hypotheses.check('depth_powers', check_depth_chain, profile, lambda n: d - (l - e + 1) + s - n + 1, s)
    return _report('cm2', hypotheses, conclusion, profile, {'s': s, 'submodule': [i + 1 for i in subset]})


def _local_pd(profile, bound):
    """pd E_P <= 2 whenever ht P <= bound, i.e. ht ann Ext^j(E, R) > bound for j >= 3."""
    pd = projective_dimension(profile.pruned)
    for j in range(3, pd + 1):
        ext = ext_module(profile.pruned, j)
        if ext.is_zero():
            continue
        h = height(annihilator(ext))
        if h <= bound:
            return HypothesisVerdict('local_pd', FAILS, witness={'ext': j, 'annihilator_height': h,
                                                                 'required': bound + 1})
    return HypothesisVerdict('local_pd', HOLDS, value=pd)


def _local_mu(profile, bound):
    """mu(E_P) <= (ht P - 1) / 2 + e for ht P <= bound, i.e. ht Fitt_{floor((h-1)/2)+e} > h."""
    e = profile.rank()
    for h in range(1, bound + 1):
        index = (h - 1) // 2 + e
        fh = profile.fitting_height(index)
        if fh <= h:
            return HypothesisVerdict('local_mu', FAILS, witness={'prime_height': h, 'fitting_index': index,
                                                                 'fitting_height': fh, 'required': h + 1})
    return HypothesisVerdict('local_mu', HOLDS)


def check_cor_cm3(module, s=None, options=None):
    """Ideal module E with G_{l-e+1}, free in codimension l - e - s, 1 <= r(E) <= s, pd E_P <= 2 and
    mu(E_P) <= (ht P - 1) / 2 + e for ht P <= l - e, and the depth chain of cm2, has a CM Rees algebra.
    """
    profile = _profile(module, options)
    hypotheses = _Hypotheses('cm3')
    conclusion = {'rees_cm': True}

    e = profile.rank()
    if e < 1:
        hypotheses.not_applicable('rank', rank=e)
        return _report('cm3', hypotheses, conclusion, profile)

    l = hypotheses.value('analytic_spread', profile.spread)
    if l is None:
        return _report('cm3', hypotheses, conclusion, profile)

    d = profile.d
    hypotheses.check('ideal_module', check_ideal_module, profile)
    hypotheses.check(_g_name(l - e + 1), check_Gs, profile, l - e + 1)
    hypotheses.check('local_pd', _local_pd, profile, l - e)
    hypotheses.check('local_mu', _local_mu, profile, l - e)

    s = _s_value(profile, s, hypotheses)
    if s is None:
        hypotheses.not_computable('depth_powers', 's')
        return _report('cm3', hypotheses, conclusion, profile)
    hypotheses.check('free_in_codim', check_free_in_codim, profile, l - e - s)
    hypotheses.check('reduction_number', check_reduction_bound, profile, 1, s)
    hypotheses.check('depth_powers', check_depth_chain, profile, lambda n: d - (l - e + 1) + s - n + 1, s)
    return _report('cm3', hypotheses, conclusion, profile, {'s': s})


def _ideal_height(ideal, at_least):
    g = height(ideal)
    if g < at_least:
        return HypothesisVerdict('height', FAILS, witness={'height': g, 'required': at_least})
    return HypothesisVerdict('height', HOLDS, value=g)


def check_cor_ideal_cm(ideal, options=None):
    """Ideal I of height g >= 2 with G_l, r(I) <= l - g + 1 and depth I^n >= d - g - n + 2 for
    1 <= n <= l - g + 1 has a Cohen-Macaulay Rees algebra.
    """
    profile = _profile(ideal, options)
    hypotheses = _Hypotheses('ideal_cm')
    conclusion = {'rees_cm': True}

    if profile.rank() != 1:
        hypotheses.not_applicable('rank', rank=profile.rank(), required=1)
        return _report('ideal_cm', hypotheses, conclusion, profile)

    d = profile.d
    if isinstance(ideal, Ideal):
        verdict = hypotheses.check('height', _ideal_height, ideal, 2)
    else:
        verdict = hypotheses.check('height', check_bourbaki_height, profile, 2)
    l = hypotheses.value('analytic_spread', profile.spread)
    if l is None or verdict.status == NOT_COMPUTABLE:
        hypotheses.not_computable('depth_powers', 'analytic_spread' if l is None else 'height')
        return _report('ideal_cm', hypotheses, conclusion, profile)

    g = verdict.value if verdict.passed else verdict.witness['height']
    hypotheses.check('G_%d' % l, check_Gs, profile, l)
    hypotheses.check('reduction_number', check_reduction_bound, profile, 0, l - g + 1)
    hypotheses.check('depth_powers', check_depth_chain, profile, lambda n: d - g - n + 2, l - g + 1)
    return _report('ideal_cm', hypotheses, conclusion, profile)


def run_theorem(theorem_id, module, options=None, subset=None, s=None):
    profile = _profile(module, options)
    _logger.info('Checking theorem %s' % theorem_id)
    if theorem_id == 'linear':
        return check_theorem_linear(profile)
    if theorem_id == 'cm':
        return check_theorem_cm(profile)
    if theorem_id == 'minrank':
        return check_prop_minrank(profile)
    if theorem_id == 'cm2':
        return check_cor_cm2(profile, subset, s)
    if theorem_id == 'cm3':
        return check_cor_cm3(profile, s)
    if theorem_id == 'ideal_cm':
        return check_cor_ideal_cm(profile)
    raise ValueError('Unknown theorem "%s"' % theorem_id)
