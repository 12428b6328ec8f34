# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import unittest

import prokit.config as conf
import prokit.error as err
from prokit.lib import checks


class TestSuites(unittest.TestCase):

    def setUp(self):
        self.saved_trials = conf.check_trials
        conf.check_trials = 5

    def tearDown(self):
        conf.check_trials = self.saved_trials

    def assert_suite_holds(self, suite):
        report = checks.run_checks(suite)
        self.assertEqual(list(report), [suite])
        failed = [r.to_json() for r in report[suite] if not r.passed]
        self.assertEqual(failed, [])

    def test_pro_axioms(self):
        self.assert_suite_holds("pro-axioms")

    def test_kronecker(self):
        self.assert_suite_holds("kronecker")

    def test_quasisum(self):
        self.assert_suite_holds("quasisum")

    def test_quantum(self):
        self.assert_suite_holds("quantum")

    def test_automata(self):
        self.assert_suite_holds("automata")

    def test_exhaustive_oracle_is_a_separate_suite(self):
        self.assertIn("paths-oracle-exhaustive", checks.suite_names())
        self.assertIs(checks.SUITES["paths-oracle-exhaustive"],
                      checks.check_paths_oracle_exhaustive)

    def test_reproducible(self):
        first = [r.to_json() for r in checks.run_checks("pro-axioms")["pro-axioms"]]
        second = [r.to_json() for r in checks.run_checks("pro-axioms")["pro-axioms"]]
        self.assertEqual(first, second)
        self.assertTrue(all(r["seed"] == conf.seed for r in first))

    def test_unknown_suite(self):
        with self.assertRaises(err.ParseError):
            checks.run_checks("everything")
        self.assertIn("all", checks.suite_names())


class TestWitnesses(unittest.TestCase):

    def test_quasi_sum_counterexample(self):
        self.assertEqual(checks.quasi_sum_counterexample(), (1, 0))

    def test_near_walls_keep_the_wall_width(self):
        walls = checks.near_walls()
        self.assertEqual(len(walls), 12)
        self.assertTrue(all(term.arity == (8, 8) for term in walls))

    def test_result_json(self):
        passed = checks.CheckResult("law", True, 3, 1)
        self.assertNotIn("witness", passed.to_json())
        failed = checks.CheckResult("law", False, 1, 1, {"terms": []})
        self.assertEqual(failed.to_json()["witness"], {"terms": []})


if __name__ == "__main__":
    unittest.main()
