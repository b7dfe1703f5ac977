import itertools
from fractions import Fraction

import numpy as np

from cli.reeslab.polynomials import EQ, GT, LT, FieldSpec, LengthMismatch, MonomialOrder, PolyRing, \
    PolynomialSyntaxError, RingMismatch, UnknownVariable, monomial_compare, poly_arith
from testcases import ReesLabTestCase


def _textbook_grevlex(u, v):
    if sum(u) != sum(v):
        return GT if sum(u) > sum(v) else LT
    diff = [a - b for a, b in zip(u, v)]
    last = next((d for d in reversed(diff) if d != 0), 0)
    return EQ if last == 0 else (GT if last < 0 else LT)


def _random_homogeneous(ring, rng, degree, terms=3):
    f = ring.zero()
    for _ in range(terms):
        exp = [0] * ring.ngens
        for _ in range(degree):
            exp[int(rng.integers(0, ring.ngens))] += 1
        f = f + ring.monomial(exp, int(rng.integers(1, ring.field.characteristic)))
    return f


class FieldTest(ReesLabTestCase):
    def test_prime_field(self):
        field = FieldSpec(7)
        self.assertEqual('ZZ/7', str(field))
        self.assertEqual(4, field.element(Fraction(1, 2)))
        self.assertEqual(-1, field.signed(6))
        self.assertEqual(1, field.normalize(field.inverse(3) * 3))

    def test_rationals(self):
        field = FieldSpec.rationals()
        self.assertEqual('QQ', str(field))
        self.assertEqual(Fraction(1, 3), field.inverse(3))

    def test_invalid_characteristic(self):
        for p in (2, 4, 9, -5):
            with self.assertRaises(ValueError):
                FieldSpec(p)


class ParseTest(ReesLabTestCase):
    def test_parse_two_terms(self):
        ring = self.ring()
        f = ring.parse('x^2 + x*y')
        self.assertEqual(2, len(f))
        self.assertEqual('x^2 + x*y', f.render())

    def test_parse_bourbaki_generator(self):
        ring = self.ring('x, y, z, z11, z21, z31, z41')
        f = ring.parse('z11*x^4 + z21*x^3*y')
        self.assertEqual(2, len(f))
        self.assertEqual(5, f.degree())
        self.assertEqual({'x', 'y', 'z11', 'z21'}, f.support())

    def test_cancellation(self):
        f = self.ring().parse('x - x')
        self.assertTrue(f.is_zero())
        self.assertEqual(0, len(f))
        self.assertIsNone(f.degree())
        self.assertEqual('0', f.render())

    def test_unary_minus_and_parentheses(self):
        ring = self.ring()
        self.assertPolynomial(ring.parse('-(x - y)^2'), '-x^2 + 2*x*y - y^2')
        self.assertEqual('x - 3*y', ring.parse('x - 3*y').render())

    def test_fractions(self):
        ring = self.ring('x, y', characteristic=0)
        self.assertEqual('1/2*x - 3/4', ring.parse('1/2*x - 3/4').render())
        self.assertEqual(1, self.ring().parse('2*(1/2)'))

    def test_syntax_error_position(self):
        ring = self.ring()
        with self.assertRaises(PolynomialSyntaxError) as cm:
            ring.parse('x + * y')
        self.assertEqual(4, cm.exception.position)

        with self.assertRaises(PolynomialSyntaxError):
            ring.parse('x^')
        with self.assertRaises(PolynomialSyntaxError):
            ring.parse('(x + y')
        with self.assertRaises(PolynomialSyntaxError):
            ring.parse('')
        with self.assertRaises(PolynomialSyntaxError):
            ring.parse('x $ y')

    def test_unknown_variable(self):
        with self.assertRaises(UnknownVariable) as cm:
            self.ring().parse('x + w')
        self.assertEqual('w', cm.exception.name)
        self.assertEqual(4, cm.exception.position)

    def test_denominator_not_invertible(self):
        with self.assertRaises(PolynomialSyntaxError):
            self.ring(characteristic=7).parse('1/7*x')


class ArithmeticTest(ReesLabTestCase):
    def setUp(self):
        self.R = self.ring()
        self.x, self.y, self.z = self.R.gens()

    def test_difference_of_squares(self):
        x, y = self.x, self.y
        self.assertPolynomial(poly_arith(x + y, x - y, 'mul'), 'x^2 - y^2')

    def test_identity(self):
        a = self.R.parse('x^2 + 3*y*z')
        self.assertEqual(a, poly_arith(a, self.R.zero(), 'add'))
        self.assertEqual(a, a + 0)
        self.assertTrue(poly_arith(a, a, 'sub').is_zero())

    def test_monomial_product(self):
        self.assertPolynomial(poly_arith(self.x ** 2, self.x * self.y, 'mul'), 'x^3*y')

    def test_multiplication_is_associative_and_commutative(self):
        rng = np.random.default_rng([5, 0])
        for _ in range(1000):
            a, b, c = (_random_homogeneous(self.R, rng, int(rng.integers(0, 4))) for _ in range(3))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertTrue(all(p.is_zero() or p.is_homogeneous() for p in (a * b, (a * b) * c)))

    def test_invalid_operation(self):
        with self.assertRaises(ValueError):
            poly_arith(self.x, self.y, 'div')

    def test_coefficients_wrap_modulo_p(self):
        f = self.R.constant(32002) * self.x + self.x
        self.assertTrue(f.is_zero())

    def test_ring_mismatch(self):
        other = self.ring('x, y')
        with self.assertRaises(RingMismatch):
            _ = self.x + other.gen('x')

    def test_exact_quotient(self):
        x, y = self.x, self.y
        self.assertEqual(x + y, (x ** 2 - y ** 2).exact_quotient(x - y))
        with self.assertRaises(ValueError):
            (x ** 2 + 1).exact_quotient(x - y)

    def test_substitute(self):
        f = self.R.parse('x^2 + y')
        self.assertPolynomial(f.substitute({'x': self.y}), 'y^2 + y')
        self.assertEqual(5, f.substitute({'x': 2, 'y': 1}))

    def test_homogeneity(self):
        self.assertTrue(self.R.parse('x^2 + y*z').is_homogeneous())
        self.assertFalse(self.R.parse('x^2 + y').is_homogeneous())

    def test_weighted_degrees(self):
        R = self.ring('x, y', degrees=[1, 2])
        f = R.parse('x^2 + y')
        self.assertTrue(f.is_homogeneous())
        self.assertEqual(2, f.degree())

    def test_change_ring(self):
        bigger = self.R.extend(['t'])
        f = self.R.parse('x*y - z^2')
        g = f.change_ring(bigger)
        self.assertEqual(bigger, g.ring)
        self.assertEqual(f, g.change_ring(self.R))
        with self.assertRaises(UnknownVariable):
            bigger.gen('t').change_ring(self.R)


class MonomialOrderTest(ReesLabTestCase):
    def test_grevlex_tie_break(self):
        self.assertEqual(GT, monomial_compare(MonomialOrder.grevlex(), (2, 1, 0), (1, 1, 1)))

    def test_grevlex_matches_definition(self):
        order = MonomialOrder.grevlex()
        monomials = [m for m in itertools.product(range(4), repeat=3) if sum(m) == 3]
        self.assertEqual(10, len(monomials))
        for u, v in itertools.product(monomials, repeat=2):
            self.assertEqual(_textbook_grevlex(u, v), monomial_compare(order, u, v), msg='%s vs %s' % (u, v))

    def test_equal(self):
        for order in (MonomialOrder.grevlex(), MonomialOrder.lex(), MonomialOrder.block(1)):
            self.assertEqual(EQ, monomial_compare(order, (1, 2, 3), (1, 2, 3)))

    def test_lex(self):
        self.assertEqual(GT, monomial_compare(MonomialOrder.lex(), (1, 0), (0, 9)))
        self.assertEqual(LT, monomial_compare(MonomialOrder.grevlex(), (1, 0), (0, 9)))

    def test_block(self):
        order = MonomialOrder.block(1)
        self.assertEqual(GT, monomial_compare(order, (1, 0, 0), (0, 5, 5)))

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            monomial_compare(MonomialOrder.lex(), (1, 0), (1, 0, 0))

    def test_invalid_ring(self):
        with self.assertRaises(ValueError):
            PolyRing(['x', 'x'])
        with self.assertRaises(ValueError):
            PolyRing(['1x'])
        with self.assertRaises(ValueError):
            PolyRing(['x', 'y'], degrees=[1])

    def test_fresh_names(self):
        R = self.ring('x, t1')
        self.assertEqual(['tt1', 'tt2'], R.fresh_names('t', 2))
