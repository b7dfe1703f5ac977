import itertools
import logging
import threading

import cachetools
from cachetools.keys import hashkey

from cli.reeslab import ReesLabError
from cli.reeslab.groebner import Ideal, ModuleGroebnerBasis, clear_cache, height, intersect
from cli.reeslab.polynomials import Polynomial, RingMismatch

_logger = logging.getLogger('modules')


class ZeroModule(ReesLabError):
    def __init__(self, operation):
        super().__init__('%s is undefined for the zero module' % operation, operation=operation)


class NotHomogeneous(ReesLabError):
    def __init__(self, what):
        super().__init__('%s is not homogeneous with respect to the given twists' % what)


def _entry(ring, value):
    if isinstance(value, Polynomial):
        if value.ring != ring:
            raise RingMismatch(ring, value.ring)
        return value
    if isinstance(value, str):
        return ring.parse(value)
    return ring.constant(value)


class Matrix(object):
    """Immutable matrix of polynomials stored by rows."""

    def __init__(self, ring, rows, ncols=None):
        rows = tuple(tuple(_entry(ring, x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError('Matrix rows must all have %d entries' % ncols)

        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._columns = None

    @classmethod
    def from_columns(cls, ring, columns, nrows):
        columns = [tuple(c) for c in columns]
        return cls(ring, [[c[i] for c in columns] for i in range(nrows)], ncols=len(columns))

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    def columns(self):
        if self._columns is None:
            self._columns = tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols))
        return self._columns

    def column(self, j):
        return self.columns()[j]

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def transpose(self):
        return Matrix.from_columns(self.ring, self.rows, self.ncols)

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError('Cannot multiply %dx%d by %dx%d' % (self.nrows, self.ncols, other.nrows, other.ncols))
        zero = self.ring.zero()
        rows = []
        for row in self.rows:
            rows.append([sum((a * b for a, b in zip(row, column) if a and b), zero) for column in other.columns()])
        return Matrix(self.ring, rows, ncols=other.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError('Cannot stack matrices with %d and %d rows' % (self.nrows, other.nrows))
        return Matrix.from_columns(self.ring, self.columns() + other.columns(), self.nrows)

    def submatrix(self, rows, cols):
        return Matrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def is_zero(self):
        return all(not e for row in self.rows for e in row)

    def change_ring(self, ring):
        return Matrix(ring, [[e.change_ring(ring) for e in row] for row in self.rows], ncols=self.ncols)

    def substitute(self, values):
        return Matrix(self.ring, [[e.substitute(values) for e in row] for row in self.rows], ncols=self.ncols)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.ncols == other.ncols and \
               self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.ncols, self.rows))

    def render(self):
        return [[str(e) for e in row] for row in self.rows]

    def __repr__(self):
        return 'Matrix(%dx%d: %s)' % (self.nrows, self.ncols, '; '.join(', '.join(r) for r in self.render()))


def column_degree(column, row_degrees):
    """Degree of a homogeneous column with respect to row twists (None for the zero column)."""
    degree = None
    for entry, twist in zip(column, row_degrees):
        if not entry:
            continue
        if not entry.is_homogeneous():
            raise NotHomogeneous('entry %s' % entry)
        d = entry.degree() + twist
        if degree is None:
            degree = d
        elif degree != d:
            raise NotHomogeneous('column (%s)' % ', '.join(str(e) for e in column))
    return degree


class PresentedModule(object):
    """E = coker(phi: R^m -> R^n); row_degrees are the twists of the generators."""

    def __init__(self, ring, phi, row_degrees=None, graded=True):
        if not isinstance(phi, Matrix):
            phi = Matrix(ring, phi)
        if phi.ring != ring:
            raise RingMismatch(ring, phi.ring)

        row_degrees = tuple(row_degrees) if row_degrees is not None else (0,) * phi.nrows
        if len(row_degrees) != phi.nrows:
            raise ValueError('Expected %d row degrees, found %d' % (phi.nrows, len(row_degrees)))

        columns = [c for c in phi.columns() if any(c)]
        self.ring = ring
        self.phi = Matrix.from_columns(ring, columns, phi.nrows)
        self.row_degrees = row_degrees
        self.graded = graded
        self.column_degrees = tuple(column_degree(c, row_degrees) for c in columns) if graded else None
        self.minimal = False

    @property
    def n(self):
        return self.phi.nrows

    @property
    def m(self):
        return self.phi.ncols

    @property
    def position_degrees(self):
        return self.row_degrees if self.graded else None

    @classmethod
    def zero(cls, ring):
        module = cls(ring, Matrix(ring, [], 0), ())
        module.minimal = True
        return module

    @classmethod
    def free(cls, ring, rank, degrees=None):
        return cls(ring, Matrix.zeros(ring, rank, 0), degrees)

    @classmethod
    def cyclic(cls, ideal, degree=0):
        """R/I as a module generated in the given degree."""
        graded = all(g.is_homogeneous() for g in ideal.gens)
        return cls(ideal.ring, Matrix(ideal.ring, [list(ideal.gens)], ncols=len(ideal.gens)), (degree,), graded)

    @classmethod
    def from_ideal(cls, ideal):
        """The ideal as a module: generators = ideal generators, relations = their syzygies."""
        gens = list(ideal.gens)
        graded = all(g.is_homogeneous() for g in gens)
        degrees = tuple(g.degree() for g in gens) if graded else None
        row = Matrix(ideal.ring, [gens], ncols=len(gens))
        relations, _ = kernel_matrix(row, (0,) if graded else None, degrees)
        return cls(ideal.ring, relations, degrees, graded)

    @classmethod
    def direct_sum_of_ideals(cls, ideals):
        result = None
        for ideal in ideals:
            summand = cls.from_ideal(ideal)
            result = summand if result is None else result.direct_sum(summand)
        return result

    def direct_sum(self, other):
        ring = self.ring
        columns = [tuple(c) + (ring.zero(),) * other.n for c in self.phi.columns()] + \
                  [(ring.zero(),) * self.n + tuple(c) for c in other.phi.columns()]
        return PresentedModule(ring, Matrix.from_columns(ring, columns, self.n + other.n),
                               self.row_degrees + other.row_degrees, self.graded and other.graded)

    def quotient_by_generators(self, indices):
        """E/U where U is generated by the listed generators (0-based)."""
        units = Matrix.from_columns(self.ring, [tuple(self.ring.one() if k == i else self.ring.zero()
                                                      for k in range(self.n)) for i in indices], self.n)
        return PresentedModule(self.ring, self.phi.hstack(units), self.row_degrees, self.graded)

    def regraded(self, row_degrees):
        return PresentedModule(self.ring, self.phi, row_degrees, self.graded)

    def change_ring(self, ring, graded=None):
        return PresentedModule(ring, self.phi.change_ring(ring), self.row_degrees,
                               self.graded if graded is None else graded)

    def is_zero(self):
        return minimal_generators(self) == 0

    def __repr__(self):
        return 'PresentedModule(n=%d, m=%d, row_degrees=%s, phi=%r)' % (self.n, self.m, self.row_degrees, self.phi)


def _unit(ring, size, index):
    return tuple(ring.one() if k == index else ring.zero() for k in range(size))


def _minimal_columns(ring, columns, degrees, rank, position_degrees):
    """Keeps a column when it is not in the submodule generated by the columns kept before it (degree order)."""
    order = sorted(range(len(columns)), key=lambda j: (degrees[j] if degrees is not None else 0, j))
    kept = []
    for j in order:
        column = columns[j]
        if not any(column):
            continue
        if kept:
            gb = ModuleGroebnerBasis(ring, rank, [columns[k] for k in kept], position_degrees)
            if gb.contains(column):
                continue
        kept.append(j)
    return [columns[j] for j in kept], ([degrees[j] for j in kept] if degrees is not None else None)


def _kernel_key(phi, row_degrees=None, column_degrees=None):
    return hashkey(phi, row_degrees, column_degrees)


_kernel_cache = cachetools.LRUCache(maxsize=512)


def clear_caches():
    _kernel_cache.clear()
    clear_cache()


@cachetools.cached(cache=_kernel_cache, key=_kernel_key, lock=threading.RLock())
def kernel_matrix(phi, row_degrees=None, column_degrees=None):
    """Generators of ker(phi: R^m -> R^n) as the columns of an m x k matrix, with their degrees.

    The kernel is read off a Gröbner basis of the columns (phi_j, e_j) under an order in which the first
    n positions dominate; minimal generators are returned when degrees are given.
    """
    ring = phi.ring
    n, m = phi.nrows, phi.ncols
    graded = column_degrees is not None

    if m == 0:
        return Matrix.zeros(ring, 0, 0), (() if graded else None)
    if n == 0:
        return Matrix.identity(ring, m), (tuple(column_degrees) if graded else None)

    columns = [phi.column(j) + _unit(ring, m, j) for j in range(m)]
    position_degrees = (tuple(row_degrees) + tuple(column_degrees)) if graded else None
    gb = ModuleGroebnerBasis(ring, n + m, columns, position_degrees, (1,) * n + (0,) * m)
    syzygies = [g[n:] for g in gb.basis if not any(g[:n])]

    degrees = [column_degree(s, column_degrees) for s in syzygies] if graded else None
    syzygies, degrees = _minimal_columns(ring, syzygies, degrees, m, column_degrees if graded else None)
    _logger.debug('Kernel of a %dx%d matrix: %d generators' % (n, m, len(syzygies)))
    return Matrix.from_columns(ring, syzygies, m), (tuple(degrees) if graded else None)


def image_module(generators, target_degrees=None, degrees=None):
    """Presentation of the submodule generated by the columns of a matrix."""
    graded = degrees is not None
    relations, _ = kernel_matrix(generators, tuple(target_degrees) if graded else None,
                                 tuple(degrees) if graded else None)
    return PresentedModule(generators.ring, relations, degrees if graded else None, graded)


def subquotient(generators, generator_degrees, relations, relation_degrees, target_degrees):
    """(im generators + im relations) / im relations, presented on the generators."""
    graded = generator_degrees is not None
    a = generators.ncols
    combined = generators.hstack(relations)
    kernel, _ = kernel_matrix(combined, tuple(target_degrees) if graded else None,
                              (tuple(generator_degrees) + tuple(relation_degrees)) if graded else None)
    presentation = Matrix(generators.ring, kernel.rows[:a], ncols=kernel.ncols)
    return PresentedModule(generators.ring, presentation, generator_degrees, graded)


def syzygies(module):
    """The module of syzygies of the columns of phi, presented on its minimal generators."""
    kernel, degrees = kernel_matrix(module.phi, module.position_degrees, module.column_degrees)
    if kernel.ncols == 0:
        return PresentedModule.zero(module.ring)
    return image_module(kernel, module.column_degrees, degrees)


def prune(module):
    """Minimal presentation: unit entries are eliminated, then redundant relations dropped."""
    if module.minimal:
        return module

    ring = module.ring
    field = ring.field
    columns = [list(c) for c in module.phi.columns()]
    row_degrees = list(module.row_degrees)

    while True:
        pivot = next(((i, j) for j, column in enumerate(columns) for i, entry in enumerate(column)
                      if entry and entry.is_constant()), None)
        if pivot is None:
            break

        i, j = pivot
        inverse = field.inverse(columns[j][i].constant_coefficient())
        pivot_column = [e.scale(inverse) for e in columns[j]]

        reduced = []
        for k, column in enumerate(columns):
            if k == j:
                continue
            c = column[i]
            if c:
                column = [a - c * b for a, b in zip(column, pivot_column)]
            reduced.append(column[:i] + column[i + 1:])
        columns = reduced
        del row_degrees[i]

    result = PresentedModule(ring, Matrix.from_columns(ring, columns, len(row_degrees)), row_degrees, module.graded)
    if result.m > 1:
        kept, _ = _minimal_columns(ring, list(result.phi.columns()), result.column_degrees, result.n,
                                   result.position_degrees)
        result = PresentedModule(ring, Matrix.from_columns(ring, kept, result.n), row_degrees, module.graded)

    result.minimal = True
    return result


def _field_rank(rows, field):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = field.inverse(rows[rank][col])
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col] * inverse
            if factor != 0:
                rows[i] = [field.normalize(a - factor * b) for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def minimal_generators(module):
    """μ(M) = n minus the rank of the constant part of phi."""
    constants = [[e.constant_coefficient() for e in row] for row in module.phi.rows]
    return module.n - _field_rank(constants, module.ring.field)


class FreeResolution(object):
    def __init__(self, ring, differentials, degrees):
        self.ring = ring
        self.differentials = tuple(differentials)
        self.degrees = tuple(tuple(d) for d in degrees)
        self.betti = tuple(len(d) for d in self.degrees)
        self._check()

    @property
    def length(self):
        return len(self.differentials)

    pd = length

    def _check(self):
        for d in self.differentials:
            for row in d.rows:
                for entry in row:
                    if entry and entry.is_constant():
                        raise AssertionError('resolution is not minimal: unit entry %s' % entry)
        for first, second in zip(self.differentials, self.differentials[1:]):
            if not (first * second).is_zero():
                raise AssertionError('consecutive differentials do not compose to zero')

    def __repr__(self):
        return 'FreeResolution(betti=%s)' % (self.betti,)


def free_resolution(module):
    if not module.graded:
        raise NotHomogeneous('module presentation')

    module = prune(module)
    differentials = []
    degrees = [module.row_degrees]

    current, current_degrees = module.phi, module.column_degrees
    target_degrees = module.row_degrees
    while current.ncols > 0:
        differentials.append(current)
        degrees.append(current_degrees)
        kernel, kernel_degrees = kernel_matrix(current, tuple(target_degrees), tuple(current_degrees))
        target_degrees = current_degrees
        current, current_degrees = kernel, kernel_degrees

    resolution = FreeResolution(module.ring, differentials, degrees)
    _logger.debug('Resolution betti numbers %s' % (resolution.betti,))
    return resolution


def projective_dimension(module):
    return free_resolution(module).length


def depth(module):
    """depth at the irrelevant ideal, d - pd(M)."""
    module = prune(module)
    if module.n == 0:
        raise ZeroModule('depth')
    return module.ring.ngens - projective_dimension(module)


def determinant(rows):
    """Determinant by cofactor expansion memoised on column subsets."""
    size = len(rows)
    if size == 0:
        return None
    ring = rows[0][0].ring
    memo = {}

    def minor(columns):
        start = size - len(columns)
        if start == size:
            return ring.one()
        if columns in memo:
            return memo[columns]

        total = ring.zero()
        for pos, c in enumerate(columns):
            entry = rows[start][c]
            if not entry:
                continue
            rest = minor(columns[:pos] + columns[pos + 1:])
            if rest:
                term = entry * rest
                total = total + term if pos % 2 == 0 else total - term
        memo[columns] = total
        return total

    return minor(tuple(range(size)))


def minors(matrix, k):
    result = []
    for rows in itertools.combinations(range(matrix.nrows), k):
        for cols in itertools.combinations(range(matrix.ncols), k):
            value = determinant([[matrix.rows[i][j] for j in cols] for i in rows])
            if value:
                result.append(value)
    return result


def fitting_ideal(module, i):
    """Fitt_i(M) = I_{n-i}(phi); (1) when n - i <= 0 and (0) when n - i > m."""
    if i < 0:
        raise ValueError('Fitting ideal index must be non-negative')

    module = prune(module)
    k = module.n - i
    if k <= 0:
        return Ideal.unit(module.ring)
    if k > module.m:
        return Ideal(module.ring)
    return Ideal(module.ring, sorted(set(minors(module.phi, k)), key=lambda f: module.ring.sort_key(f.lead_exponent)))


def generic_rank(matrix):
    """Rank over the fraction field by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in matrix.rows]
    n, m = matrix.nrows, matrix.ncols
    ring = matrix.ring
    rank = 0
    previous = ring.one()

    for col in range(m):
        pivot = next((i for i in range(rank, n) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, n):
            for j in range(col + 1, m):
                rows[i][j] = (p * rows[i][j] - rows[i][col] * rows[rank][j]).exact_quotient(previous)
            rows[i][col] = ring.zero()
        previous = p
        rank += 1
        if rank == n:
            break

    return rank


def module_rank(module):
    return module.n - generic_rank(module.phi)


def gs_violation(module, s, rank=None, fitting_height=None):
    """First failure of G_s as (j, fitting index, height), or None.

    mu(E_p) > t iff p contains Fitt_t(E), so G_s holds iff ht Fitt_{e+j-1}(E) >= j + 1 for 1 <= j <= s - 1;
    s is capped at d + 1. fitting_height(i) may supply cached heights.
    """
    module = prune(module)
    e = module_rank(module) if rank is None else rank
    if fitting_height is None:
        def fitting_height(i):
            return height(fitting_ideal(module, i))

    top = min(s, module.ring.ngens + 1)
    for j in range(1, int(top)):
        h = fitting_height(e + j - 1)
        if h < j + 1:
            return j, e + j - 1, h
    return None


def dual_generators(module):
    """Generators of Hom(M, R) inside F0* = ker(phi^t), with their degrees; module must be pruned."""
    graded = module.graded
    target = tuple(-d for d in module.column_degrees) if graded else None
    source = tuple(-d for d in module.row_degrees) if graded else None
    return kernel_matrix(module.phi.transpose(), target, source)


def dual_module(module):
    module = prune(module)
    functionals, degrees = dual_generators(module)
    if functionals.ncols == 0:
        return PresentedModule.zero(module.ring)

    target = tuple(-d for d in module.row_degrees) if module.graded else None
    return prune(image_module(functionals, target, degrees))


def exterior_power(module, t):
    if not 1 <= t <= module.n:
        raise ValueError('Exterior power %d out of range 1..%d' % (t, module.n))

    module = prune(module)
    ring = module.ring
    n = module.n
    if t > n:
        return PresentedModule.zero(ring)

    basis = list(itertools.combinations(range(n), t))
    index = {subset: k for k, subset in enumerate(basis)}
    degrees = [sum(module.row_degrees[s] for s in subset) for subset in basis]

    columns = []
    for column in module.phi.columns():
        for subset in itertools.combinations(range(n), t - 1):
            entries = [ring.zero()] * len(basis)
            for i in range(n):
                if i in subset or not column[i]:
                    continue
                target = index[tuple(sorted(subset + (i,)))]
                if sum(1 for s in subset if s < i) % 2 == 0:
                    entries[target] = entries[target] + column[i]
                else:
                    entries[target] = entries[target] - column[i]
            if any(entries):
                columns.append(entries)

    return PresentedModule(ring, Matrix.from_columns(ring, columns, len(basis)), degrees, module.graded)


def _torsion_kernel(module):
    """Generators (with degrees) of ker(F0 -> M**), i.e. of the preimage of T(M); module must be pruned."""
    functionals, degrees = dual_generators(module)
    if functionals.ncols == 0:
        return Matrix.identity(module.ring, module.n), module.position_degrees

    target = tuple(-d for d in degrees) if module.graded else None
    return kernel_matrix(functionals.transpose(), target, module.position_degrees)


def torsion_submodule(module):
    """T(M) = ker(M -> M**)."""
    module = prune(module)
    if module.n == 0:
        return module

    kernel, degrees = _torsion_kernel(module)
    if kernel.ncols == 0:
        return PresentedModule.zero(module.ring)
    return prune(subquotient(kernel, degrees, module.phi, module.column_degrees or (), module.position_degrees))


def is_torsion_free(module):
    module = prune(module)
    if module.n == 0:
        return True

    kernel, _ = _torsion_kernel(module)
    if kernel.ncols == 0:
        return True
    relations = ModuleGroebnerBasis(module.ring, module.n, module.phi.columns(), module.position_degrees)
    return all(relations.contains(column) for column in kernel.columns())


def koszul_differential(gens, i):
    """d_i: K_i -> K_{i-1} of the Koszul complex on gens, e_S -> sum_k (-1)^k g_{s_k} e_{S - s_k}."""
    ring = gens[0].ring
    n = len(gens)
    sources = list(itertools.combinations(range(n), i))
    targets = list(itertools.combinations(range(n), i - 1))
    index = {subset: k for k, subset in enumerate(targets)}

    columns = []
    for subset in sources:
        entries = [ring.zero()] * len(targets)
        for k, s in enumerate(subset):
            target = index[subset[:k] + subset[k + 1:]]
            entries[target] = gens[s] if k % 2 == 0 else -gens[s]
        columns.append(entries)
    return Matrix.from_columns(ring, columns, len(targets)), sources, targets


def koszul_homology(ideal):
    """[H_0, ..., H_n] of the Koszul complex on the generator sequence of the ideal."""
    ring = ideal.ring
    gens = list(ideal.gens)
    n = len(gens)
    graded = all(g.is_homogeneous() for g in gens)
    weights = [g.degree() for g in gens]

    def degrees_of(subsets):
        return tuple(sum(weights[s] for s in subset) for subset in subsets) if graded else None

    homology = [prune(PresentedModule.cyclic(ideal))]
    for i in range(1, n + 1):
        d_i, sources, targets = koszul_differential(gens, i)
        kernel, kernel_degrees = kernel_matrix(d_i, degrees_of(targets), degrees_of(sources))
        if kernel.ncols == 0:
            homology.append(PresentedModule.zero(ring))
            continue

        if i < n:
            d_next, next_sources, _ = koszul_differential(gens, i + 1)
            h = subquotient(kernel, kernel_degrees, d_next, degrees_of(next_sources) or (), degrees_of(sources))
        else:
            h = image_module(kernel, degrees_of(sources), kernel_degrees)
        homology.append(prune(h))

    return homology


def annihilator(module):
    """0 :_R M as the intersection of the colon ideals (im phi : e_j)."""
    module = prune(module)
    ring = module.ring
    if module.n == 0:
        return Ideal.unit(ring)

    result = None
    for j in range(module.n):
        unit = Matrix.from_columns(ring, [_unit(ring, module.n, j)], module.n)
        combined = unit.hstack(module.phi)
        degrees = ((module.row_degrees[j],) + module.column_degrees) if module.graded else None
        kernel, _ = kernel_matrix(combined, module.position_degrees, degrees)
        colon = Ideal(ring, kernel.rows[0] if kernel.nrows else ())
        result = colon if result is None else intersect(result, colon)
    return result


def grade_of_module(module):
    module = prune(module)
    if module.n == 0:
        raise ZeroModule('grade')
    return height(annihilator(module))


def ext_module(module, j):
    """Ext^j(M, R) from the dual of the minimal free resolution."""
    resolution = free_resolution(module)
    ring = module.ring
    p = resolution.length
    if j < 0 or j > p:
        return PresentedModule.zero(ring)

    degrees = [tuple(-d for d in ds) for ds in resolution.degrees]
    if j == p:
        kernel, kernel_degrees = Matrix.identity(ring, len(degrees[j])), degrees[j]
    else:
        kernel, kernel_degrees = kernel_matrix(resolution.differentials[j].transpose(), degrees[j + 1], degrees[j])
    if kernel.ncols == 0:
        return PresentedModule.zero(ring)

    if j == 0:
        return prune(image_module(kernel, degrees[0], kernel_degrees))
    return prune(subquotient(kernel, kernel_degrees, resolution.differentials[j - 1].transpose(),
                             degrees[j - 1], degrees[j]))
