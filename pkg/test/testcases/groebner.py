import numpy as np

from cli.reeslab.groebner import HEIGHT_INFINITY, Budget, BudgetExceeded, Ideal, eliminate, groebner_basis, \
    height, ideal_quotient, intersect, krull_dimension, normal_form, saturate
from cli.reeslab.polynomials import MonomialOrder
from testcases import ReesLabTestCase


def _random_polynomial(ring, rng, terms=3, max_degree=3):
    f = ring.zero()
    for _ in range(terms):
        exp = [0] * ring.ngens
        for _ in range(int(rng.integers(1, max_degree + 1))):
            exp[int(rng.integers(0, ring.ngens))] += 1
        f = f + ring.monomial(exp, int(rng.integers(1, ring.field.characteristic)))
    return f


class GroebnerBasisTest(ReesLabTestCase):
    def test_already_reduced(self):
        R = self.ring('x, y')
        gb = groebner_basis(self.ideal(R, 'x', 'y'))
        self.assertEqual({R.gen('x'), R.gen('y')}, set(gb.basis))

    def test_lex_hand_computation(self):
        R = self.ring('x, y', order=MonomialOrder.lex())
        gb = groebner_basis(self.ideal(R, 'x^2 - y', 'x^3'))
        self.assertIn(R.parse('y^2'), gb.basis)
        self.assertEqual({R.parse('x^2 - y'), R.parse('x*y'), R.parse('y^2')}, set(gb.basis))
        self.assertTrue(gb.contains(R.parse('x^3')))

    def test_unit_ideal(self):
        R = self.ring()
        gb = groebner_basis(Ideal.unit(R))
        self.assertEqual((R.one(),), gb.basis)
        self.assertTrue(gb.is_unit())
        self.assertTrue(self.ideal(R, 'x + 1', 'x').is_unit())

    def test_reduced_and_monic(self):
        R = self.ring()
        gb = groebner_basis(self.ideal(R, '2*x^2 - y*z', '3*x*y - z^2', 'y^3 - x*z^2'))
        leads = gb.lead_exponents
        for g in gb.basis:
            self.assertEqual(1, g.lead_coefficient)
            for exp, _ in g.terms:
                for lead in leads:
                    if lead != g.lead_exponent:
                        self.assertFalse(all(a <= b for a, b in zip(lead, exp)))

    def test_zero_ideal(self):
        R = self.ring()
        self.assertEqual((), groebner_basis(Ideal(R, ['0', 'x - x'])).basis)


class NormalFormTest(ReesLabTestCase):
    def setUp(self):
        self.R = self.ring()

    def test_generators_reduce_to_zero(self):
        ideal = self.ideal(self.R, 'x^2 - y*z', 'x*y + z^2')
        gb = ideal.groebner()
        for g in ideal.gens:
            self.assertTrue(normal_form(g, gb).is_zero())

    def test_one_in_proper_ideal(self):
        gb = self.ideal(self.R, 'x', 'y').groebner()
        self.assertEqual(1, normal_form(self.R.one(), gb))

    def test_one_division_step(self):
        gb = self.ideal(self.R, 'x^2 - y').groebner()
        self.assertPolynomial(normal_form(self.R.parse('x^2*y'), gb), 'y^2')

    def test_membership_consistency(self):
        rng = np.random.default_rng([7, 0])
        R = self.ring('x, y, z')
        for _ in range(50):
            gens = [_random_polynomial(R, rng) for _ in range(2)]
            ideal = Ideal(R, gens)
            gb = ideal.groebner()
            for _ in range(20):
                f = _random_polynomial(R, rng)
                member = f * gens[0] + _random_polynomial(R, rng, 2, 1) * gens[1]
                self.assertTrue(gb.contains(member))
                remainder = normal_form(f, gb)
                self.assertTrue(gb.contains(f - remainder))
                self.assertEqual(remainder, normal_form(remainder, gb))


class EliminationTest(ReesLabTestCase):
    def test_parabola(self):
        R = self.ring('x, y, t')
        result = eliminate(self.ideal(R, 'x - t', 'y - t^2'), ['t'])
        self.assertSameIdeal(self.ideal(R, 'y - x^2'), result)
        self.assertTrue(all('t' not in g.support() for g in result.gens))

    def test_nothing_to_eliminate(self):
        R = self.ring('x, y')
        self.assertSameIdeal(self.ideal(R, 'x'), eliminate(self.ideal(R, 'x'), ['y']))

    def test_everything_eliminated(self):
        R = self.ring('x, t')
        self.assertTrue(eliminate(self.ideal(R, 't'), ['t']).is_zero())

    def test_intersection(self):
        R = self.ring('x, y')
        self.assertSameIdeal(self.ideal(R, 'x*y'), intersect(self.ideal(R, 'x'), self.ideal(R, 'y')))
        self.assertSameIdeal(self.ideal(R, 'x^2', 'x*y'),
                             intersect(self.ideal(R, 'x'), self.ideal(R, 'x^2', 'y')))


class QuotientTest(ReesLabTestCase):
    def setUp(self):
        self.R = self.ring('x, y, z')

    def test_colon(self):
        R = self.R
        self.assertSameIdeal(self.ideal(R, 'x'), ideal_quotient(self.ideal(R, 'x^2'), self.ideal(R, 'x')))
        self.assertSameIdeal(self.ideal(R, 'y'), ideal_quotient(self.ideal(R, 'x*y'), self.ideal(R, 'x')))
        self.assertSameIdeal(self.ideal(R, 'x', 'y'),
                             ideal_quotient(self.ideal(R, 'x^2*y', 'x*y^2'), self.ideal(R, 'x*y')))

    def test_colon_by_contained_ideal(self):
        R = self.R
        self.assertTrue(ideal_quotient(self.ideal(R, 'x', 'y'), self.ideal(R, 'x*y')).is_unit())

    def test_saturation(self):
        R = self.R
        self.assertSameIdeal(self.ideal(R, 'y'), saturate(self.ideal(R, 'x^2*y'), R.gen('x')))
        self.assertSameIdeal(self.ideal(R, 'x', 'y'), saturate(self.ideal(R, 'x', 'y'), R.gen('z')))

    def test_saturation_idempotent(self):
        rng = np.random.default_rng([11, 0])
        R = self.R
        for _ in range(5):
            ideal = Ideal(R, [_random_polynomial(R, rng, 2, 3) * R.gen('x') for _ in range(2)])
            f = R.gen('x')
            once = saturate(ideal, f)
            self.assertSameIdeal(once, saturate(once, f))
            self.assertTrue(ideal.is_subset(once))

    def test_saturation_by_zero(self):
        with self.assertRaises(ValueError):
            saturate(self.ideal(self.R, 'x'), self.R.zero())


class DimensionTest(ReesLabTestCase):
    def test_hypersurface(self):
        ideal = self.ideal(self.ring(), 'x*y')
        self.assertEqual(2, krull_dimension(ideal))
        self.assertEqual(1, height(ideal))

    def test_zero_ideal(self):
        ideal = Ideal(self.ring())
        self.assertEqual(3, krull_dimension(ideal))
        self.assertEqual(0, height(ideal))

    def test_unit_ideal(self):
        ideal = Ideal.unit(self.ring())
        self.assertEqual(-1, krull_dimension(ideal))
        self.assertEqual(HEIGHT_INFINITY, height(ideal))

    def test_maximal_ideal(self):
        self.assertEqual(3, height(self.ideal(self.ring(), 'x', 'y', 'z')))
        self.assertEqual(2, height(self.ideal(self.ring(), 'x^2', 'x*y', 'y^2')))


class BudgetTest(ReesLabTestCase):
    def test_degree_cap(self):
        R = self.ring()
        with Budget(degree_cap=3):
            with self.assertRaises(BudgetExceeded) as cm:
                groebner_basis(self.ideal(R, 'x^4 - y^3*z', 'x*y*z^2 - 2*z^4'))
        self.assertEqual('degree', cm.exception.budget)
        self.assertEqual(3, cm.exception.limit)

    def test_overruns_are_recorded(self):
        R = self.ring()
        budget = Budget(degree_cap=3)
        with budget:
            with self.assertRaises(BudgetExceeded) as cm:
                groebner_basis(self.ideal(R, 'x^4 - y^3*z', 'x*y*z^2 - 2*z^4'))
            groebner_basis(self.ideal(R, 'x', 'y'))
        self.assertEqual([cm.exception], budget.exceeded)

    def test_nested_budgets(self):
        outer = Budget(degree_cap=10)
        with outer:
            with Budget(degree_cap=5) as inner:
                self.assertIs(inner, Budget.current())
            self.assertIs(outer, Budget.current())

    def test_error_object(self):
        obj = BudgetExceeded('time', 1.0, 2.5).to_json()
        self.assertFalse(obj['success'])
        self.assertEqual('BudgetExceeded', obj['type'])
        self.assertEqual('time', obj['budget'])
