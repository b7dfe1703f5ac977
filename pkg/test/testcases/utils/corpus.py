from cli.reeslab.groebner import Ideal
from cli.reeslab.modules import PresentedModule
from cli.reeslab.polynomials import FieldSpec, PolyRing

# Direct sums of monomial ideals: (variables, summands)
CORPUS = [
    ('x, y', [['x', 'y']]),
    ('x, y', [['x^2', 'x*y', 'y^2']]),
    ('x, y', [['x', 'y'], ['x', 'y']]),
    ('x, y', [['x^2', 'y^2'], ['x', 'y']]),
    ('x, y', [['x'], ['x', 'y']]),
    ('x, y', [['x^2', 'x*y'], ['y']]),
    ('x, y, z', [['x', 'y', 'z']]),
    ('x, y, z', [['x', 'y'], ['y', 'z']]),
    ('x, y, z', [['x^2', 'x*y'], ['y', 'z']]),
    ('x, y, z', [['x^2', 'x*y'], ['y*z', 'z^2']]),
    ('x, y, z', [['x', 'y'], ['z']]),
    ('x, y, z', [['x*y', 'x*z', 'y*z']]),
    ('x, y, z', [['x', 'y', 'z'], ['x', 'y']]),
    ('x, y, z', [['x^2', 'y^2', 'z^2']]),
    ('x, y, z', [['x*y', 'z^2'], ['x', 'z']]),
    ('x, y, z', [['x'], ['y'], ['z']]),
    ('x, y, z', [['x', 'y'], ['x', 'z'], ['y', 'z']]),
    ('x, y, z', [['x^2', 'y*z'], ['x', 'y']]),
    ('x, y, z', [['x*y', 'y*z'], ['x', 'z']]),
    ('x, y, z', [['x', 'y', 'z'], ['x', 'y', 'z']]),
    ('x, y, z, w', [['x', 'y'], ['z', 'w']]),
    ('x, y, z, w', [['x*z', 'x*w', 'y*z', 'y*w']]),
    ('x, y, z, w', [['x', 'y', 'z', 'w']]),
    ('x, y, z, w', [['x', 'y'], ['z'], ['w']]),
    ('x, y, z, w', [['x*y', 'z*w'], ['x', 'z']]),
    ('x, y, z, w', [['x', 'z'], ['y', 'w']]),
]


def build(variables, summands, characteristic=32003):
    ring = PolyRing([v.strip() for v in variables.split(',')], FieldSpec(characteristic))
    return PresentedModule.direct_sum_of_ideals([Ideal(ring, gens) for gens in summands])


def describe(summands):
    return ' + '.join('(%s)' % ', '.join(gens) for gens in summands)
