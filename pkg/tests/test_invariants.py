import unittest
from fractions import Fraction

from modules.genfun.genfun_engine import a_from_divisor_sum
from modules.invariants.fg_formula import abelian_fg, fg_series
from modules.invariants.lagrange_checks import (
    binom_identity_check,
    binomial_closed,
    binomial_sum,
    epsilon_series,
    residue_form,
    x_coefficient_form,
    z2_inversion_check,
)
from modules.invariants.refined_invariants import (
    InvariantsEngine,
    euler_invariants_check,
    numconj_series,
    refined_invariants,
)
from modules.invariants.s_polynomials import (
    P_poly,
    ZPolynomial,
    s_poly,
    s_polynomials,
)
from modules.invariants.thm_higher import (
    inverse_tilde_delta,
    thm_higher_A,
    thm_higher_K,
)
from modules.invariants.x_expansion import x_expand, x_reconstruct
from modules.ring_core.errors import DegreeOverflow
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent

Y = ULaurent.y()


class TestXExpansion(unittest.TestCase):
    def test_x_itself(self):
        self.assertEqual(
            x_expand(TLaurent.x(), 2), [ULaurent.one(), ULaurent.zero()]
        )

    def test_constant(self):
        self.assertEqual(x_expand(TLaurent.one() * 3, 1), [ULaurent({0: 3})])

    def test_degree_overflow(self):
        with self.assertRaises(DegreeOverflow):
            x_expand(TLaurent.x() ** 2, 2)
        with self.assertRaises(DegreeOverflow):
            x_expand(TLaurent.one(), 0)

    def test_reconstruct(self):
        p = a_from_divisor_sum(3).coeff(3)
        values = x_expand(p, 4)
        self.assertEqual(x_reconstruct(values, 4), p)


class TestSPolynomials(unittest.TestCase):
    def test_s_poly(self):
        self.assertEqual(s_poly(0), ULaurent.one())
        self.assertEqual(s_poly(1), ULaurent({1: 1, -1: 1}))
        self.assertEqual(s_poly(2), ULaurent({2: 1, 0: 4, -2: 1}))

    def test_P_low_degrees(self):
        half = UFraction.constant(Fraction(1, 2))
        ratio = UFraction(Y + 1, Y - 1) * Fraction(-1, 2)
        self.assertEqual(P_poly(0), ZPolynomial([UFraction.one()]))
        self.assertEqual(
            P_poly(1), ZPolynomial([UFraction.zero(), UFraction.one()])
        )
        self.assertEqual(
            P_poly(2), ZPolynomial([UFraction.zero(), ratio, half])
        )

    def test_P3(self):
        p3 = P_poly(3)
        self.assertEqual(p3.degree, 3)
        self.assertEqual(
            p3[1], UFraction(Y * Y + Y * 4 + 1, (Y - 1) ** 2) * Fraction(1, 3)
        )
        self.assertEqual(p3[3], UFraction.constant(Fraction(1, 6)))

    def test_P_vanishes_at_zero(self):
        for n in range(1, 5):
            self.assertEqual(P_poly(n).evaluate(0), UFraction.zero())

    def test_bundle(self):
        bundle = s_polynomials(3)
        self.assertEqual(len(bundle.s), 4)
        self.assertEqual(len(bundle.P), 4)
        self.assertEqual(bundle.S.order, 4)


class TestFgFormula(unittest.TestCase):
    def test_f2_is_x(self):
        self.assertEqual(abelian_fg(2).value, TLaurent.x())

    def test_properties(self):
        for g in range(2, 8):
            fg = abelian_fg(g)
            with self.subTest(g=g):
                self.assertTrue(fg.is_symmetric())
                self.assertTrue(fg.vanishes_at_t_equal_u())
                self.assertTrue(fg.support_is_valid())

    def test_needs_genus_two(self):
        with self.assertRaises(ValueError):
            abelian_fg(1)

    def test_series_is_A(self):
        self.assertEqual(fg_series(4), a_from_divisor_sum(4))


class TestClosedForms(unittest.TestCase):
    def test_abelian_genus_two(self):
        values = refined_invariants("abelian", 2)
        self.assertEqual([v.i for v in values], [0, 1])
        self.assertEqual(values[0].value, ULaurent.one())
        self.assertEqual(values[1].value, ULaurent.zero())
        self.assertEqual(values[0].delta, 0)
        self.assertEqual(thm_higher_A(2, 3).coeff(1), ULaurent.one())

    def test_abelian_matches_closed_form(self):
        g = 4
        values = refined_invariants("abelian", g, 0, g - 1)
        for i in range(g - 1):
            with self.subTest(i=i):
                self.assertEqual(
                    values[i].value, thm_higher_A(g - i, g - 1).coeff(g - 1)
                )
                self.assertTrue(values[i].is_palindromic())

    def test_abelian_h_below_two(self):
        with self.assertRaises(ValueError):
            thm_higher_A(1, 3)

    def test_k3_genus_zero(self):
        values = refined_invariants("k3", 0)
        self.assertEqual(len(values), 1)
        self.assertEqual(values[0].value, ULaurent.one())
        self.assertEqual(thm_higher_K(0, 3), inverse_tilde_delta(3))

    def test_k3_genus_one_matches_closed_form(self):
        values = refined_invariants("k3", 1)
        self.assertEqual(len(values), 2)
        self.assertEqual(values[1].value, thm_higher_K(0, 1).coeff(0))
        self.assertEqual(values[0].value, thm_higher_K(1, 1).coeff(0))

    def test_euler_numbers_commute_with_extraction(self):
        for surface in ("abelian", "k3"):
            for k in (0, 1):
                report = euler_invariants_check(surface, k, 3)
                self.assertTrue(report.passed, report.summary())

    def test_top_terms(self):
        # delta = 0 for abelian genus 2 without point conditions
        top = numconj_series("abelian", 0, 3)
        self.assertEqual(top.coeff(1), ULaurent.one())


class TestInvariantsEngine(unittest.TestCase):
    def test_table_genera(self):
        with InvariantsEngine(3) as engine:
            table = engine.table("abelian", 0, 4)
        self.assertEqual(sorted(table), [2, 3, 4])
        self.assertEqual(len(table[4]), 4)

    def test_genus_beyond_order(self):
        with self.assertRaises(ValueError):
            InvariantsEngine(2).invariants("abelian", 5)

    def test_at_y1(self):
        value = InvariantsEngine(1).invariants("abelian", 2)[0]
        self.assertEqual(value.at_y1(), 1)


class TestLagrangeChecks(unittest.TestCase):
    def test_epsilon_starts_with_w(self):
        eps = epsilon_series(4)
        self.assertEqual(eps.lead, 1)
        self.assertEqual(eps.coeff(1), UFraction.one())

    def test_z2_inversion(self):
        reports = z2_inversion_check(6)
        self.assertEqual(len(reports), 2)
        self.assertTrue(all(reports), [r.summary() for r in reports])

    def test_binomial_identity(self):
        for n in range(6):
            for l in range(n + 1):
                self.assertEqual(binomial_sum(n, l), binomial_closed(n, l))

    def test_residue_forms(self):
        self.assertEqual(residue_form(0), ULaurent.one())
        self.assertEqual(residue_form(1), Y + 1)
        self.assertEqual(x_coefficient_form(2), residue_form(2))

    def test_all_forms_agree(self):
        reports = binom_identity_check(4)
        self.assertTrue(all(reports), [r.summary() for r in reports])


if __name__ == "__main__":
    unittest.main()
