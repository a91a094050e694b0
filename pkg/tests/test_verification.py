import unittest

import numpy as np

from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import TLAURENTS
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent
from modules.verification.check_report import (
    CheckReport,
    compare_series,
    compare_values,
)
from modules.verification.verify_suite import (
    REGISTRY,
    VerifyCheck,
    VerifyContext,
    VerifySuite,
    checks_for,
    random_unit_series,
    run_suite,
)


class TestCheckReport(unittest.TestCase):
    def test_summary(self):
        self.assertEqual(
            CheckReport("heat", True, 3).summary(), "[PASS] heat (order 3)"
        )
        failing = CheckReport("heat", False, 3, (2, 1, 0))
        self.assertFalse(failing)
        self.assertIn("first failure at q^2 t^1 u^0", failing.summary())

    def test_first_failing_monomial(self):
        x = TLaurent.x()
        lhs = QSeries(TLAURENTS, {1: x}, 3)
        rhs = QSeries(TLAURENTS, {1: x, 2: TLaurent.t()}, 3)
        report = compare_series("shifted", lhs, rhs)
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure, (2, 1, 0))
        self.assertTrue(compare_series("window", lhs, rhs, t_window=0))

    def test_compare_values(self):
        self.assertTrue(compare_values("same", ULaurent.y(), ULaurent.y()))
        report = compare_values("off", ULaurent.y(), ULaurent.one())
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure[0], 0)


class TestRegistry(unittest.TestCase):
    def test_suites(self):
        self.assertEqual(len(checks_for("all")), len(REGISTRY))
        self.assertEqual(len(checks_for("forms")), 5)
        self.assertTrue(
            all(c.suite == "inversion" for c in checks_for("inversion"))
        )
        with self.assertRaises(ValueError):
            checks_for("bogus")


class TestVerifySuite(unittest.TestCase):
    def setUp(self):
        self.ctx = VerifyContext(order=3, t_order=10, x_order=4)

    def test_inversion_suite_passes(self):
        result = run_suite("inversion", self.ctx, workers=2)
        self.assertTrue(result.all_passed, "\n".join(result.lines()))
        self.assertTrue(
            result.lines()[-1].endswith("(suite inversion, order 3)")
        )

    def test_forms_suite_passes(self):
        result = run_suite("forms", self.ctx, workers=2)
        self.assertTrue(result.all_passed, "\n".join(result.lines()))

    def test_k3_closed_forms_reach_genus_eight(self):
        (check,) = [c for c in checks_for("invariants")
                    if c.name == "K3 closed forms"]
        reports = check.run(VerifyContext(order=8, t_order=22, x_order=4))
        self.assertTrue(all(reports), [r.summary() for r in reports
                                       if not r.passed])
        self.assertTrue(any(r.name.startswith("K3 g = 8 ")
                            for r in reports))

    def test_genfun_suite_has_t_equal_u_checks(self):
        names = [c.name for c in checks_for("genfun")]
        self.assertIn("t = u specializations", names)

    def test_errors_become_failures_in_order(self):
        def boom(ctx):
            raise ArithmeticError("broken")

        def fine(ctx):
            return [CheckReport("fine", True, ctx.order)]

        checks = [
            VerifyCheck("forms", "boom", boom),
            VerifyCheck("forms", "fine", fine),
        ]
        with VerifySuite("forms", 2, checks) as suite:
            result = suite.run(self.ctx)
        self.assertEqual([r.name for r in result.reports], ["boom", "fine"])
        self.assertEqual(result.failed, 1)
        self.assertEqual(result.reports[0].detail, "broken")

    def test_random_series_is_seeded(self):
        first = random_unit_series(np.random.default_rng(7), 5)
        second = random_unit_series(np.random.default_rng(7), 5)
        self.assertEqual(first, second)
        self.assertEqual(first.coeff(1), ULaurent.one())


if __name__ == "__main__":
    unittest.main()
