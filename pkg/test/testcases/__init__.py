import os
import unittest

from cli.reeslab.groebner import Ideal
from cli.reeslab.modules import PresentedModule
from cli.reeslab.polynomials import FieldSpec, PolyRing

__this_dir = os.path.dirname(os.path.realpath(__file__))
TEST_RESOURCES = os.path.abspath(os.path.join(__this_dir, 'res'))


class ReesLabTestCase(unittest.TestCase):
    def ring(self, variables='x, y, z', characteristic=32003, degrees=None, order=None):
        names = [v.strip() for v in variables.split(',')]
        return PolyRing(names, FieldSpec(characteristic), degrees, order)

    @staticmethod
    def ideal(ring, *gens):
        return Ideal(ring, list(gens))

    @staticmethod
    def direct_sum(ring, *ideals):
        """Direct sum of ideals given as lists of generator strings."""
        return PresentedModule.direct_sum_of_ideals([Ideal(ring, gens) for gens in ideals])

    def example3(self):
        """(x^2, xy) + (y, z) over k[x, y, z]."""
        return self.direct_sum(self.ring(), ['x^2', 'x*y'], ['y', 'z'])

    def example4(self):
        """(x^2, xy) + (yz, z^2) over k[x, y, z]."""
        return self.direct_sum(self.ring(), ['x^2', 'x*y'], ['y*z', 'z^2'])

    def resource(self, *path):
        return os.path.join(TEST_RESOURCES, *path)

    def assertSameIdeal(self, first, second):
        if not first.equals(second):
            raise self.failureException('%r and %r are different ideals' % (first, second))

    def assertPolynomial(self, poly, text):
        expected = poly.ring.parse(text)
        if poly != expected:
            raise self.failureException('%s != %s' % (poly, expected))
