from cli.reeslab.checker import FAILS, HOLDS, INF, NOT_APPLICABLE, NOT_COMPUTABLE, PROBABLY_HOLDS, \
    HypothesisVerdict, ModuleProfile, TheoremReport, check_ANs, check_cor_cm2, check_cor_cm3, check_Fs, check_Gs, \
    check_free_in_codim, check_ideal_module, check_orientable, check_prop_minrank, check_sliding_depth, \
    check_theorem_cm, check_theorem_linear, run_theorem
from cli.reeslab.groebner import Budget
from cli.reeslab.modules import Matrix, PresentedModule
from testcases import ReesLabTestCase


class VerdictTest(ReesLabTestCase):
    def test_failure_needs_witness(self):
        with self.assertRaises(ValueError):
            HypothesisVerdict('G_inf', FAILS)

    def test_passed(self):
        self.assertTrue(HypothesisVerdict('a', HOLDS).passed)
        self.assertTrue(HypothesisVerdict('a', PROBABLY_HOLDS, witness={'seed': 1}).passed)
        self.assertFalse(HypothesisVerdict('a', NOT_COMPUTABLE).passed)

    def test_to_json(self):
        obj = HypothesisVerdict('height', FAILS, witness={'height': INF, 'required': 2}).to_json()
        self.assertEqual({'name': 'height', 'status': FAILS, 'witness': {'height': 'inf', 'required': 2}}, obj)

    def test_report_status(self):
        holds = HypothesisVerdict('a', HOLDS)
        likely = HypothesisVerdict('b', PROBABLY_HOLDS, witness={'seed': 42})
        fails = HypothesisVerdict('c', FAILS, witness={'n': 1})
        unknown = HypothesisVerdict('d', NOT_COMPUTABLE, witness={'budget': 'time'})

        self.assertEqual(HOLDS, TheoremReport('t', [holds], {}, {}).status)
        self.assertEqual(PROBABLY_HOLDS, TheoremReport('t', [holds, likely], {}, {}).status)
        self.assertEqual(FAILS, TheoremReport('t', [likely, unknown, fails], {}, {}).status)
        self.assertEqual(NOT_COMPUTABLE, TheoremReport('t', [holds, unknown], {}, {}).status)

    def test_consistency(self):
        holds = HypothesisVerdict('a', HOLDS)
        fails = HypothesisVerdict('b', FAILS, witness={'n': 1})
        conclusion = {'rees_cm': True}

        self.assertTrue(TheoremReport('t', [holds], conclusion, {'rees_cm': True}).consistent)
        self.assertFalse(TheoremReport('t', [holds], conclusion, {'rees_cm': False}).consistent)
        self.assertTrue(TheoremReport('t', [holds, fails], conclusion, {'rees_cm': False}).consistent)
        self.assertTrue(TheoremReport('t', [holds], conclusion, {'status': NOT_COMPUTABLE}).consistent)
        self.assertFalse(TheoremReport('t', [holds], conclusion, {'rees_cm': True},
                                       {'rees_cm_agrees': False}).consistent)


class ModuleConditionTest(ReesLabTestCase):
    def test_gs(self):
        self.assertEqual(HOLDS, check_Gs(self.example3(), INF).status)

        R = self.ring('x, y')
        verdict = check_Gs(self.direct_sum(R, ['x', 'y'], ['x', 'y']), 3)
        self.assertEqual('G_3', verdict.name)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual({'prime_height': 2, 'fitting_index': 3, 'fitting_height': 2, 'required': 3},
                         verdict.witness)

    def test_fs(self):
        self.assertEqual(HOLDS, check_Fs(self.ideal(self.ring(), 'x', 'y', 'z'), 1).status)

        R = self.ring('x, y')
        verdict = check_Fs(self.direct_sum(R, ['x', 'y'], ['x', 'y']), 1)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual(2, verdict.witness['prime_height'])
        self.assertEqual(3, verdict.witness['fitting_index'])

    def test_f1_agrees_with_g_infinity_on_ideals(self):
        R2, R3 = self.ring('x, y'), self.ring()
        for ideal, status in ((self.ideal(R3, 'x', 'y', 'z'), HOLDS), (self.ideal(R3, 'x', 'y'), HOLDS),
                              (self.ideal(R2, 'x^2', 'x*y', 'y^2'), FAILS)):
            self.assertEqual(status, check_Fs(ideal, 1).status)
            self.assertEqual(status, check_Gs(ideal, INF).status)

    def test_orientable(self):
        self.assertEqual(HOLDS, check_orientable(self.example3()).status)
        self.assertEqual(NOT_APPLICABLE,
                         check_orientable(PresentedModule.cyclic(self.ideal(self.ring(), 'x'))).status)

    def test_ideal_module(self):
        R = self.ring()
        self.assertEqual(HOLDS, check_ideal_module(self.example3()).status)
        self.assertEqual(HOLDS, check_ideal_module(self.ideal(R, 'x', 'y', 'z')).status)

        mixed = PresentedModule.cyclic(self.ideal(R, 'x')).direct_sum(PresentedModule.free(R, 1))
        verdict = check_ideal_module(mixed)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual('torsion', verdict.witness['reason'])

    def test_reflexive_module_is_not_ideal_module(self):
        R = self.ring()
        syzygy = PresentedModule(R, Matrix(R, [['x'], ['y'], ['z']]))
        verdict = check_ideal_module(syzygy)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual('double dual is not free', verdict.witness['reason'])

    def test_free_in_codim(self):
        E = self.example3()
        verdict = check_free_in_codim(E, 1)
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(2, verdict.value)

        verdict = check_free_in_codim(E, 2)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual({'fitting_height': 2, 'required': 3}, verdict.witness)


class IdealConditionTest(ReesLabTestCase):
    def test_sliding_depth_complete_intersection(self):
        verdict = check_sliding_depth(self.ideal(self.ring(), 'x', 'y', 'z'))
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual({0: 0}, verdict.value)

    def test_sliding_depth_almost_complete_intersection(self):
        verdict = check_sliding_depth(self.ideal(self.ring(), 'x^2', 'x*y'))
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(1, verdict.value[0])

    def test_an_complete_intersection(self):
        verdict = check_ANs(self.ideal(self.ring(), 'x', 'y', 'z'), 1, seed=42)
        self.assertEqual(PROBABLY_HOLDS, verdict.status)
        self.assertEqual({'tested': [1]}, verdict.value)
        self.assertEqual({'seed': 42}, verdict.witness)

    def test_an_fails_on_non_cm_link(self):
        R = self.ring('x, y, z, w')
        verdict = check_ANs(self.ideal(R, 'x*z', 'x*w', 'y*z', 'y*w'), 2, seed=42)
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual(2, verdict.witness['i'])
        self.assertEqual(42, verdict.witness['seed'])


class TheoremTest(ReesLabTestCase):
    def test_linear_type_theorem(self):
        report = check_theorem_linear(self.example3())
        self.assertEqual(HOLDS, report.status)
        self.assertTrue(report.consistent)
        self.assertEqual(4, report.verdict('analytic_spread').value)
        self.assertEqual({1: 2, 2: 2}, report.verdict('depth_powers').value)
        self.assertTrue(report.direct['linear_type'])
        self.assertTrue(report.direct['rees_cm'])

    def test_linear_type_theorem_fails_on_depth(self):
        report = check_theorem_linear(self.ideal(self.ring(), 'x', 'y', 'z'))
        verdict = report.verdict('depth_powers')
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual({'n': 1, 'depth': 1, 'required': 2}, verdict.witness)
        self.assertEqual(FAILS, report.status)
        self.assertTrue(report.consistent)

    def test_minrank(self):
        report = check_prop_minrank(self.example4())
        self.assertEqual(HOLDS, report.status)
        self.assertEqual(4, report.verdict('mu_bound').value)
        self.assertEqual(2, report.verdict('depth').value)
        self.assertTrue(report.direct['linear_type'])
        self.assertTrue(report.consistent)

    def test_minrank_too_many_generators(self):
        report = check_prop_minrank(self.ideal(self.ring('x, y'), 'x^2', 'x*y', 'y^2'))
        self.assertEqual({'mu': 3, 'bound': 2}, report.verdict('mu_bound').witness)
        self.assertEqual(FAILS, report.status)
        self.assertFalse(report.direct['linear_type'])
        self.assertTrue(report.consistent)

    def test_cm_theorem(self):
        report = check_theorem_cm(self.example3())
        self.assertEqual(PROBABLY_HOLDS, report.status)
        self.assertEqual(2, report.verdict('bourbaki_height').value)
        self.assertEqual(0, report.verdict('reduction_number').value)
        self.assertTrue(report.direct['rees_cm'])
        self.assertTrue(report.consistent)

    def test_cm_theorem_not_applicable(self):
        report = check_theorem_cm(PresentedModule.free(self.ring(), 2))
        self.assertEqual(NOT_APPLICABLE, report.status)
        self.assertEqual(NOT_APPLICABLE, report.verdict('spread_guard').status)

    def test_cm_theorem_ideal_branch(self):
        R = self.ring()
        E = PresentedModule.free(R, 1).direct_sum(PresentedModule.from_ideal(self.ideal(R, 'x', 'y', 'z')))
        report = check_theorem_cm(E)
        self.assertEqual(3, report.verdict('bourbaki_height').value)
        self.assertIn('ideal_cm', report.related)
        self.assertTrue(report.related['rees_cm_agrees'])
        self.assertTrue(report.consistent)

    def test_cm2_not_applicable(self):
        report = check_cor_cm2(self.example3(), subset=[0, 1, 2])
        self.assertEqual(NOT_APPLICABLE, report.verdict('spread_guard').status)

    def test_cm3_local_mu(self):
        report = check_cor_cm3(self.example3())
        self.assertEqual(HOLDS, report.verdict('local_pd').status)
        self.assertEqual({'prime_height': 2, 'fitting_index': 2, 'fitting_height': 2, 'required': 3},
                         report.verdict('local_mu').witness)
        self.assertEqual(0, report.verdict('s_default').value)
        self.assertEqual(FAILS, report.status)
        self.assertTrue(report.consistent)

    def test_rank_zero(self):
        report = check_theorem_linear(PresentedModule.cyclic(self.ideal(self.ring(), 'x')))
        self.assertEqual(NOT_APPLICABLE, report.status)

    def test_unknown_theorem(self):
        with self.assertRaises(ValueError):
            run_theorem('unknown', self.example3())

    def test_budget_exhaustion(self):
        R = self.ring()
        profile = ModuleProfile(self.direct_sum(R, ['x^3', 'y^3'], ['x*z^2', 'y^2*z']))
        profile.rank()

        with Budget(degree_cap=2):
            report = check_theorem_linear(profile)

        unknown = [h for h in report.hypotheses if h.status == NOT_COMPUTABLE]
        self.assertTrue(unknown)
        self.assertTrue(any(h.witness.get('budget') == 'degree' for h in unknown))
        self.assertNotEqual(HOLDS, report.status)
        self.assertTrue(report.consistent)
