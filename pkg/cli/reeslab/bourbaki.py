import logging

import numpy as np

from cli.reeslab import DEFAULT_SEED, ReesLabError
from cli.reeslab.groebner import Ideal, height
from cli.reeslab.modules import Matrix, PresentedModule, dual_generators, grade_of_module, gs_violation, \
    is_torsion_free, module_rank, prune
from cli.reeslab.rees import NotAReduction, analytic_spread, linear_forms, reduction_number, rees_algebra, \
    regular_sequence_on_rees

_logger = logging.getLogger('bourbaki')

SYMBOLIC = 'symbolic'
RANDOM = 'random'


class RankTooSmall(ReesLabError):
    def __init__(self, rank):
        super().__init__('a generic Bourbaki ideal needs rank >= 1, found %d' % rank, rank=rank)


class NotTorsionFree(ReesLabError):
    def __init__(self, reason, attempts=None):
        message = 'the quotient by the generic elements is not torsion-free (%s)' % reason
        if attempts:
            message += '; tried %s' % ', '.join('seed %d attempt %d' % a for a in attempts)
        super().__init__(message, reason=reason)


class InvalidSubmodule(ReesLabError):
    def __init__(self, subset, reason):
        super().__init__('invalid submodule U = %s: %s' % (list(subset), reason), reason=reason)


class VerificationFailed(ReesLabError):
    def __init__(self, clause, **details):
        detail = ', '.join('%s=%s' % (k, v) for k, v in sorted(details.items()))
        super().__init__('Bourbaki verification failed: %s%s' % (clause, ' (%s)' % detail if detail else ''),
                         clause=clause)
        self.clause = clause
        self.details = details


class BourbakiResult(object):
    """I ≅ E''/F with F generated by x_j = sum_i z_ij a_i, j = 1..e-1, over the generators in U."""

    def __init__(self, mode, seed, base_ring, extended_ring, subset, rank, generic_elements, coefficients,
                 quotient, functional, ideal, graded):
        self.mode = mode
        self.seed = seed
        self.base_ring = base_ring
        self.extended_ring = extended_ring
        self.subset = tuple(subset)
        self.rank = rank
        self.generic_elements = tuple(generic_elements)
        self.coefficients = dict(coefficients)
        self.quotient = quotient
        self.functional = tuple(functional)
        self.ideal = ideal
        self.graded = graded
        self.attempt = 0
        self.height = height(ideal)
        self.verified = {'torsion_free_quotient': True, 'positive_grade': self.height >= 1}

    def render_generic_elements(self):
        lines = []
        for j, column in enumerate(self.generic_elements):
            terms = ['(%s)*a%d' % (c, i + 1) if len(c) > 1 else '%s*a%d' % (c, i + 1)
                     for i, c in enumerate(column) if c]
            lines.append('x%d = %s' % (j + 1, ' + '.join(terms)))
        return lines

    def to_json(self):
        return {
            'mode': self.mode,
            'seed': self.seed if self.mode == RANDOM else None,
            'attempt': self.attempt if self.mode == RANDOM else None,
            'ring': str(self.extended_ring),
            'generic_elements': self.render_generic_elements(),
            'ideal': [str(g) for g in self.ideal.gens],
            'height': self.height,
            'verified': dict(self.verified),
        }

    def __repr__(self):
        return 'BourbakiResult(mode=%s, height=%s, ideal=%r)' % (self.mode, self.height, self.ideal)


def _z_names(base, subset, rank):
    names = {(i, j): 'z%d%d' % (i + 1, j + 1) for j in range(rank - 1) for i in subset}
    prefix = 'z'
    while any(name in base.variables for name in names.values()):
        prefix += 'z'
        names = {(i, j): '%s%d%d' % (prefix, i + 1, j + 1) for j in range(rank - 1) for i in subset}
    return names


def _row_components(module):
    """Connected components of generators linked by a common relation."""
    parent = list(range(module.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for column in module.phi.columns():
        rows = [i for i, entry in enumerate(column) if entry]
        for i in rows[1:]:
            parent[find(i)] = find(rows[0])
    return [find(i) for i in range(module.n)]


def _equigenerated_degrees(module, subset):
    """Twists under which the generators in subset share one degree, or None when no shift allows it."""
    if not module.graded:
        return None

    components = _row_components(module)
    target = max(module.row_degrees[i] for i in subset)
    shifts = {}
    for i in subset:
        shift = target - module.row_degrees[i]
        if shifts.setdefault(components[i], shift) != shift:
            return None
    return tuple(d + shifts.get(c, 0) for d, c in zip(module.row_degrees, components))


def _embedding(quotient, check=True):
    """A minimal-degree functional on a rank-one module and its image ideal."""
    pruned = prune(quotient)
    if check:
        rank = module_rank(pruned)
        if rank != 1:
            raise NotTorsionFree('rank %d after factoring the generic elements' % rank)
        if not is_torsion_free(pruned):
            raise NotTorsionFree('torsion')

    functionals, degrees = dual_generators(pruned)
    if degrees is not None:
        k = min(range(functionals.ncols), key=lambda c: (degrees[c], c))
    else:
        k = min(range(functionals.ncols), key=lambda c: (max(e.degree() or 0 for e in functionals.column(c)), c))
    functional = functionals.column(k)
    return functional, Ideal(pruned.ring, [f for f in functional if f])


def generic_bourbaki(module, subset=None, mode=RANDOM, seed=DEFAULT_SEED, retries=5):
    """Generic Bourbaki ideal of E with respect to U, the submodule generated by the generators in subset.

    In symbolic mode the z_ij are new variables of degree D - deg a_i; in random mode they are specialised
    to seeded random scalars, after shifting twists so that U is generated in a single degree when possible.
    """
    base = module.ring
    rank = module_rank(module)
    if rank < 1:
        raise RankTooSmall(rank)

    n = module.n
    subset = sorted(set(range(n) if subset is None else subset))
    if not subset:
        raise InvalidSubmodule(subset, 'no generators')
    if any(not 0 <= i < n for i in subset):
        raise InvalidSubmodule(subset, 'generator index out of range 1..%d' % n)
    if len(subset) < n:
        quotient = module.quotient_by_generators(subset)
        if not quotient.is_zero() and grade_of_module(quotient) == 0:
            raise InvalidSubmodule(subset, 'E/U is not torsion')

    if rank == 1:
        functional, ideal = _embedding(module, check=False)
        return BourbakiResult(mode, seed, base, base, subset, rank, [], {}, module, functional, ideal,
                              module.graded)

    if mode == SYMBOLIC:
        return _symbolic(module, subset, rank, seed)
    if mode != RANDOM:
        raise ValueError('Invalid Bourbaki mode "%s"' % mode)

    attempts = []
    for attempt in range(retries):
        try:
            return _random(module, subset, rank, seed, attempt)
        except NotTorsionFree as e:
            _logger.warning('Bourbaki specialisation with seed %d attempt %d failed: %s' % (seed, attempt, e))
            attempts.append((seed, attempt))
    raise NotTorsionFree('every specialisation failed', attempts)


def _symbolic(module, subset, rank, seed):
    base = module.ring
    names = _z_names(base, subset, rank)
    top = max(module.row_degrees[i] for i in subset) + 1
    ordered = sorted(names, key=lambda ij: (ij[1], ij[0]))
    ring = base.extend([names[ij] for ij in ordered], [top - module.row_degrees[i] for i, _ in ordered])

    zero = ring.zero()
    columns = [[ring.gen(names[(i, j)]) if i in subset else zero for i in range(module.n)]
               for j in range(rank - 1)]

    extended = module.change_ring(ring)
    quotient = PresentedModule(ring, extended.phi.hstack(Matrix.from_columns(ring, columns, module.n)),
                               module.row_degrees, module.graded)
    functional, ideal = _embedding(quotient)

    _logger.info('Symbolic Bourbaki ideal over %s with %d generators' % (ring, len(ideal)))
    return BourbakiResult(SYMBOLIC, seed, base, ring, subset, rank, columns, names, quotient, functional, ideal,
                          module.graded)


def _random(module, subset, rank, seed, attempt):
    ring = module.ring
    field = ring.field
    rng = np.random.default_rng([seed, attempt])
    _logger.info('Random Bourbaki specialisation: seed %d attempt %d' % (seed, attempt))

    coefficients = {}
    for j in range(rank - 1):
        for i in subset:
            coefficients[(i, j)] = field.random_element(rng)

    zero = ring.zero()
    columns = [[ring.constant(coefficients[(i, j)]) if i in subset else zero for i in range(module.n)]
               for j in range(rank - 1)]

    degrees = _equigenerated_degrees(module, subset)
    graded = degrees is not None
    if not graded:
        _logger.warning('U is not equigenerated under any regrading: working without a grading')
    quotient = PresentedModule(ring, module.phi.hstack(Matrix.from_columns(ring, columns, module.n)),
                               degrees, graded)
    functional, ideal = _embedding(quotient)
    result = BourbakiResult(RANDOM, seed, ring, ring, subset, rank, columns, coefficients, quotient, functional,
                            ideal, graded)
    result.attempt = attempt
    return result


def specialize(result, values):
    """Substitutes scalars for the z_ij of a symbolic result; values is keyed by (i, j) or by variable name."""
    if result.mode != SYMBOLIC:
        raise ValueError('Only symbolic Bourbaki results can be specialised')

    substitution = {}
    for key, value in values.items():
        name = result.coefficients[key] if isinstance(key, tuple) else key
        substitution[name] = value
    base = result.base_ring
    return Ideal(base, [g.substitute(substitution).change_ring(base) for g in result.ideal.gens])


def stable_bourbaki_height(module, subset=None, seed=DEFAULT_SEED, seeds=3, retries=5):
    """Heights of random Bourbaki ideals for consecutive seeds; they must agree."""
    results = [generic_bourbaki(module, subset, RANDOM, seed + k, retries) for k in range(seeds)]
    heights = [r.height for r in results]
    if len(set(heights)) > 1:
        raise VerificationFailed('seed-stability', heights=heights)
    return heights[0], results


def bourbaki_verify(result, module, seed=DEFAULT_SEED, reduction_retries=3):
    """Re-checks a Bourbaki result; in random mode adds the cross-checks that pass from E to I.

    Raises VerificationFailed on torsion, zero grade, a spread mismatch under G_{l-e+1}, or I failing
    G_{l-e+1} when E satisfies it. The reduction number and regular sequence checks are recorded as flags.
    """
    flags = dict(result.verified)

    if result.generic_elements and not is_torsion_free(result.quotient):
        raise VerificationFailed('torsion_free_quotient')
    flags['torsion_free_quotient'] = True

    h = height(result.ideal)
    if h < 1:
        raise VerificationFailed('positive_grade', height=h)
    flags['positive_grade'] = True
    flags['height'] = h

    if result.mode != RANDOM or result.rank < 2:
        result.verified = flags
        return flags

    e = result.rank
    package = rees_algebra(module, minimize=False)
    ideal_module = PresentedModule.from_ideal(result.ideal)
    ideal_package = rees_algebra(ideal_module)
    spread, ideal_spread = analytic_spread(package), analytic_spread(ideal_package)
    flags['analytic_spread'] = {'module': spread, 'ideal': ideal_spread}

    s = spread - e + 1
    module_gs = gs_violation(module, s, e) is None
    if module_gs:
        if ideal_spread != spread - e + 1:
            raise VerificationFailed('analytic_spread', expected=spread - e + 1, found=ideal_spread)
        if gs_violation(ideal_module, s, 1) is not None:
            raise VerificationFailed('G_l', s=s)
    flags['G_l'] = module_gs

    try:
        r_module = reduction_number(package, seed, retries=reduction_retries)
        r_ideal = reduction_number(ideal_package, seed, retries=reduction_retries)
        flags['reduction_number'] = r_ideal.value <= r_module.value
    except NotAReduction:
        flags['reduction_number'] = None

    vectors = [[result.coefficients.get((i, j), 0) for i in range(module.n)] for j in range(e - 1)]
    flags['regular_sequence'] = regular_sequence_on_rees(package, linear_forms(package, vectors))

    result.verified = flags
    return flags
