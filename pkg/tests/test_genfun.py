import unittest
from fractions import Fraction

from modules.genfun.change_of_variable import (
    change_of_variable,
    inversion_checks,
    q_of_x_closed,
    q_of_x_newton,
    q_of_x_y1,
    specialize_y1,
    x_of_q,
    x_of_q_y1,
)
from modules.forms.form_series import tilde_delta_product, tilde_dg2_sum
from modules.genfun.euler_specializations import (
    euler_checks,
    mpt_check,
    series_at_y1,
    specialize_u,
    xk_at_y1,
)
from modules.genfun.genfun_engine import (
    A_CONSTRUCTIONS,
    GenFunEngine,
    a_from_divisor_sum,
    a_from_indefinite_theta,
    at_t_equal_u,
)
from modules.genfun.ktrivial import (
    Surface,
    coefficient_genera,
    ktrivial_genfun,
    vanishing_check,
)
from modules.qseries.qseries import QSeries, XSeries
from modules.ring_core.coefficient_rings import RATIONALS, ULAURENTS
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent


class TestChangeOfVariable(unittest.TestCase):
    def test_inverse_pair(self):
        x = x_of_q(6)
        q = q_of_x_newton(6)
        self.assertEqual(x.compose(q), XSeries.gen(ULAURENTS, 6))
        self.assertEqual(q.compose(x), QSeries.gen(ULAURENTS, 6))
        self.assertEqual(q_of_x_closed(6), q)

    def test_first_coefficients(self):
        q = q_of_x_newton(3)
        self.assertEqual(q.coeff(1), ULaurent.one())
        # x = q + [2]_y q^2 / 2 + ...
        self.assertEqual(
            q.coeff(2), ULaurent({1: Fraction(-1, 2), -1: Fraction(-1, 2)})
        )

    def test_all_inversion_checks_pass(self):
        reports = inversion_checks(5)
        self.assertEqual(len(reports), 5)
        self.assertTrue(all(reports), [r.summary() for r in reports])

    def test_change_of_variable_orders(self):
        cov = change_of_variable(4, 6)
        self.assertEqual(cov.x_of_q.order, 4)
        self.assertEqual(cov.q_of_x.order, 6)
        self.assertEqual(cov.order, 4)

    def test_y1_closed_forms(self):
        self.assertEqual(specialize_y1(x_of_q(5)), x_of_q_y1(5))
        self.assertEqual(specialize_y1(q_of_x_newton(5)), q_of_x_y1(5))


class TestGenFunEngine(unittest.TestCase):
    def setUp(self):
        self.engine = GenFunEngine(4, 12)

    def test_rejects_bad_orders(self):
        with self.assertRaises(ValueError):
            GenFunEngine(0)
        with self.assertRaises(ValueError):
            self.engine.series("Z")

    def test_a_starts_with_x(self):
        self.assertEqual(self.engine.series_A().coeff(1), TLaurent.x())

    def test_a_constructions_agree(self):
        reference = self.engine.series_A("divisor").series
        for construction in A_CONSTRUCTIONS:
            with self.subTest(construction=construction):
                self.assertEqual(
                    self.engine.series_A(construction).series, reference
                )

    def test_theta_derivative_route_matches_divisor_sum(self):
        theta_route = a_from_indefinite_theta(6)
        self.assertEqual(theta_route.order, 6)
        self.assertEqual(theta_route, a_from_divisor_sum(6))

    def test_h_and_x(self):
        a = self.engine.series_A().series
        h = self.engine.series_H().series
        x = self.engine.series_X("compose").series
        self.assertEqual(h.D(), a)
        self.assertEqual(x, self.engine.series_X("genus").series)
        self.assertEqual(x_of_q(4).compose(x), h)
        self.assertEqual(x.coeff(1), TLaurent.x())

    def test_k_polar_term_is_inverse_x(self):
        k = self.engine.series_K()
        self.assertEqual(k.t_order, 12)
        polar = k.coeff(-1)
        for n in range(5):
            self.assertEqual(
                polar.coefficient(n + 1), ULaurent.quantum_integer(n + 1)
            )

    def test_x_times_k_starts_at_one(self):
        xk = self.engine.series_xK().series
        self.assertEqual(xk.lead, -1)
        self.assertEqual(xk.coeff(-1), TLaurent.one())


class TestTEqualsU(unittest.TestCase):
    def setUp(self):
        self.engine = GenFunEngine(5, 14)
        self.dg2 = tilde_dg2_sum(5)

    def test_a_over_x(self):
        a = at_t_equal_u(self.engine.series_A().series, divide_by_x=True)
        self.assertEqual(a, self.dg2.D())
        self.assertEqual(a.coeff(2), ULaurent({2: 2, 0: 8, -2: 2}))

    def test_h_over_x(self):
        h = at_t_equal_u(self.engine.series_H().series, divide_by_x=True)
        self.assertEqual(h, self.dg2)

    def test_xk_is_inverse_tilde_delta(self):
        xk = at_t_equal_u(self.engine.series_xK().series)
        self.assertEqual(xk, tilde_delta_product(7).inverse())


class TestEulerSpecializations(unittest.TestCase):
    def test_exact_series_match_closed_forms(self):
        reports = euler_checks(3, 10)
        self.assertTrue(all(reports), [r.summary() for r in reports])

    def test_xk_closed_form(self):
        xk = xk_at_y1(4)
        self.assertEqual(xk.coeff(-1), TLaurent.one())
        exact = specialize_u(GenFunEngine(4).series_xK().series, 1)
        self.assertEqual(exact, xk)

    def test_h_at_y1_and_x_at_y1(self):
        h = series_at_y1("H", 4, 10)
        x = series_at_y1("X", 4, 10)
        self.assertEqual(x, h * (1 + h).inverse())
        with self.assertRaises(ValueError):
            series_at_y1("xK", 4, 10)

    def test_mpt_expansion(self):
        for k in range(1, 4):
            self.assertTrue(mpt_check(k, 5).passed)

    def test_mpt_expansion_with_flipped_signs_fails(self):
        self.assertFalse(mpt_check(1, 5, flip_signs=True).passed)


class TestKTrivial(unittest.TestCase):
    def test_surface_numbers(self):
        self.assertEqual(Surface.ABELIAN.chi, 0)
        self.assertEqual(Surface.K3.chi, 2)
        self.assertEqual(Surface.ABELIAN.delta(2, 0), 0)
        self.assertEqual(Surface.K3.delta(2, 0), 2)
        self.assertEqual(Surface.ABELIAN.min_genus(1), 3)
        self.assertEqual(Surface.K3.min_genus(0), 0)

    def test_vanishing_below_dimension_bound(self):
        for surface in Surface:
            for k in range(3):
                with self.subTest(surface=surface, k=k):
                    self.assertTrue(vanishing_check(surface, k, 4).passed)

    def test_k_zero_is_the_base_series(self):
        series = ktrivial_genfun("abelian", 0, order=3).series
        self.assertEqual(series, GenFunEngine(3).series_A().series)
        self.assertEqual(coefficient_genera(series), [2, 3, 4])

    def test_negative_k(self):
        with self.assertRaises(ValueError):
            ktrivial_genfun("abelian", -1)

    def test_rational_ring_of_y1_series(self):
        self.assertIs(x_of_q_y1(3).ring, RATIONALS)


if __name__ == "__main__":
    unittest.main()
