from cli.reeslab import ReesLabError
from cli.reeslab.bourbaki import VerificationFailed, bourbaki_verify, generic_bourbaki, stable_bourbaki_height
from cli.reeslab.checker import ModuleProfile, check_prop_minrank, check_theorem_linear
from cli.reeslab.modules import gs_violation
from testcases import ReesLabTestCase
from testcases.utils.corpus import CORPUS, build, describe


class CorpusTest(ReesLabTestCase):
    """Properties every module of the corpus must satisfy, whatever its invariants are."""

    @classmethod
    def setUpClass(cls):
        cls.profiles = [(describe(summands), ModuleProfile(build(variables, summands)))
                        for variables, summands in CORPUS]

    def test_spread_and_dimension(self):
        for name, profile in self.profiles:
            with self.subTest(module=name):
                e = profile.rank()
                self.assertGreaterEqual(e, 1)
                self.assertLessEqual(profile.spread(), profile.d + e - 1)
                self.assertEqual(profile.d + e, profile.rees_cm().dim)

    def test_criteria_are_sound(self):
        for name, profile in self.profiles:
            with self.subTest(module=name):
                self.assertTrue(check_theorem_linear(profile).consistent)
                self.assertTrue(check_prop_minrank(profile).consistent)

    def test_bourbaki_invariants_pass_to_the_ideal(self):
        checked = 0
        for name, profile in self.profiles:
            e = profile.rank()
            if e < 2 or gs_violation(profile.pruned, profile.spread() - e + 1, e) is not None:
                continue

            with self.subTest(module=name):
                try:
                    result = generic_bourbaki(profile.module, seed=42)
                    flags = bourbaki_verify(result, profile.module, seed=42)
                    stable_bourbaki_height(profile.module, seed=42)
                except VerificationFailed:
                    raise
                except ReesLabError:
                    continue

                spread = flags['analytic_spread']
                self.assertEqual(spread['module'] - e + 1, spread['ideal'])
                self.assertTrue(flags['positive_grade'])
                checked += 1

        self.assertGreater(checked, 0)
