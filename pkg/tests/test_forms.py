import unittest
from fractions import Fraction

from modules.forms.form_series import (
    FormsEngine,
    discriminant,
    eisenstein_g2,
    phi_10_1_product,
    phi_10_1_quotient,
    tilde_delta_product,
    tilde_delta_quotient,
    tilde_dg2_sum,
    tilde_dg2_theta,
)
from modules.forms.indefinite_theta import (
    a_from_heat_equation,
    a_from_theta,
    a_lattice_sum,
)
from modules.forms.theta_engine import ThetaArgument, ThetaEngine
from modules.forms.zagier_check import zagier_identity_check
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import RATIONALS
from modules.ring_core.errors import NonDivisible, PrefactorImbalance
from modules.ring_core.ulaurent import ULaurent


class TestThetaEngine(unittest.TestCase):
    def setUp(self):
        self.engine = ThetaEngine(6)

    def test_heat_equation(self):
        self.assertTrue(self.engine.heat_residual().is_zero())

    def test_heat_equation_rejects_other_factors(self):
        for factor in (Fraction(1, 2), Fraction(-1, 6)):
            self.assertFalse(self.engine.heat_residual(factor).is_zero())

    def test_sum_matches_product(self):
        for argument in ThetaArgument:
            self.assertEqual(
                self.engine.theta_from_sum(argument).body,
                self.engine.theta(argument).body,
            )
        self.assertEqual(
            self.engine.theta_from_sum(ThetaArgument.Y).hat(),
            self.engine.theta_hat(ThetaArgument.Y),
        )

    def test_half_integral_prefactor_has_no_hat(self):
        with self.assertRaises(PrefactorImbalance):
            self.engine.theta_from_sum(ThetaArgument.T_FORMAL).hat()

    def test_theta_prime_0(self):
        prime = self.engine.theta_prime_0()
        self.assertEqual(
            prime.truncate(3), QSeries(RATIONALS, {0: 1, 1: -3, 3: 5}, 3)
        )


class TestModularForms(unittest.TestCase):
    def test_eisenstein_g2(self):
        g2 = eisenstein_g2(4)
        self.assertEqual(g2.coeff(0), Fraction(-1, 24))
        self.assertEqual([g2.coeff(n) for n in range(1, 5)], [1, 3, 4, 7])

    def test_discriminant(self):
        self.assertEqual(
            discriminant(3), QSeries(RATIONALS, {1: 1, 2: -24, 3: 252}, 3)
        )

    def test_products_match_theta_quotients(self):
        order = 4
        self.assertEqual(
            tilde_delta_product(order), tilde_delta_quotient(order)
        )
        self.assertEqual(phi_10_1_product(order), phi_10_1_quotient(order))
        self.assertEqual(tilde_dg2_sum(order), tilde_dg2_theta(order))

    def test_tilde_dg2_leading_terms(self):
        series = tilde_dg2_sum(2)
        self.assertEqual(series.coeff(1), ULaurent.one())
        self.assertEqual(series.coeff(2), ULaurent({2: 1, 0: 4, -2: 1}))

    def test_engine_rejects_unknown_construction(self):
        with FormsEngine(3) as forms:
            with self.assertRaises(ValueError):
                forms.tilde_delta("lattice")


class TestIndefiniteTheta(unittest.TestCase):
    def test_constructions_agree(self):
        lattice = a_lattice_sum(5)
        self.assertEqual(a_from_theta(5), lattice)
        self.assertEqual(a_from_heat_equation(5), lattice)

    def test_wrong_heat_factor_is_detected(self):
        with self.assertRaises(NonDivisible):
            a_from_heat_equation(5, Fraction(-1, 6))

    def test_lattice_sum_first_term(self):
        self.assertEqual(a_lattice_sum(1).coeff(1), ULaurent({2: 1, -2: -1}))


class TestZagierIdentity(unittest.TestCase):
    def test_identity_holds(self):
        self.assertTrue(zagier_identity_check(4, 8).passed)

    def test_dropping_the_sum_fails(self):
        report = zagier_identity_check(4, 8, drop_sum=True)
        self.assertFalse(report.passed)
        self.assertIsNotNone(report.first_failure)


if __name__ == "__main__":
    unittest.main()
