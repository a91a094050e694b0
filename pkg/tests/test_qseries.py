import unittest
from fractions import Fraction

import numpy as np

from modules.qseries.qseries import QSeries, XSeries
from modules.qseries.residues import (
    lagrange_coefficient,
    reconstruct,
    residue_expansion,
)
from modules.ring_core.coefficient_rings import RATIONALS, ULAURENTS
from modules.ring_core.errors import (
    BadValuation,
    NonUnitLinear,
    NonzeroConstantTerm,
    OutOfRange,
)
from modules.ring_core.ulaurent import ULaurent


def geometric(order: int) -> QSeries:
    return QSeries(RATIONALS, {n: 1 for n in range(order + 1)}, order)


def random_series(rng, order: int, lead: int = 0) -> QSeries:
    terms = {}
    for m in range(lead, order + 1):
        exponents = rng.integers(-2, 3, size=2)
        values = rng.integers(-5, 6, size=2)
        coefficient = {}
        for e, v in zip(exponents, values):
            coefficient[int(e)] = coefficient.get(int(e), 0) + int(v)
        terms[m] = ULaurent(coefficient)
    return QSeries(ULAURENTS, terms, order)


class TestPrecision(unittest.TestCase):
    def test_product_order(self):
        f = QSeries(RATIONALS, {0: 1, 1: 1}, 5)
        g = QSeries(RATIONALS, {1: 1}, 3)
        self.assertEqual((f * g).order, 3)
        self.assertEqual((g * g).order, 4)

    def test_inverse_order(self):
        self.assertEqual(QSeries(RATIONALS, {0: 1, 1: -1}, 5).inverse(),
                         geometric(5))
        inverse = QSeries(RATIONALS, {1: 1, 2: -1}, 5).inverse()
        self.assertEqual(inverse.lead, -1)
        self.assertEqual(inverse.order, 3)
        self.assertEqual([inverse.coeff(m) for m in range(-1, 4)], [1] * 5)

    def test_coefficients_beyond_order_are_unknown(self):
        with self.assertRaises(OutOfRange):
            geometric(3).coeff(4)


class TestCalculus(unittest.TestCase):
    def test_D_and_Dinv(self):
        f = QSeries(RATIONALS, {1: 1, 2: 1, 3: 1}, 3)
        self.assertEqual(f.D(), QSeries(RATIONALS, {1: 1, 2: 2, 3: 3}, 3))
        self.assertEqual(f.D().Dinv(), f)
        with self.assertRaises(NonzeroConstantTerm):
            geometric(3).Dinv()

    def test_exp_and_log(self):
        q = QSeries.gen(RATIONALS, 4)
        self.assertEqual(q.exp().coeff(3), Fraction(1, 6))
        log = geometric(4).log()
        self.assertEqual(
            log,
            QSeries(RATIONALS, {n: Fraction(1, n) for n in range(1, 5)}, 4),
        )
        self.assertEqual(log.exp(), geometric(4))
        with self.assertRaises(BadValuation):
            QSeries(RATIONALS, {0: 2}, 3).log()


class TestDerivationRules(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(99)

    def test_leibniz(self):
        for _ in range(5):
            f = random_series(self.rng, 5)
            g = random_series(self.rng, 5)
            self.assertEqual((f * g).D(), f.D() * g + f * g.D())

    def test_derivative_of_exp(self):
        for _ in range(5):
            f = random_series(self.rng, 5, lead=1)
            e = f.exp()
            self.assertEqual(e.D(), e * f.D())
            self.assertEqual(e.log(), f)

    def test_exact_divide_recovers_factor(self):
        for _ in range(5):
            f = random_series(self.rng, 5)
            g = random_series(self.rng, 5)
            g = g + (ULaurent.one() - g.coeff(0))
            self.assertEqual((f * g).exact_divide(g), f)


class TestComposition(unittest.TestCase):
    def test_compose_order(self):
        outer = geometric(3)
        inner = QSeries(RATIONALS, {2: 1}, 10)
        result = outer.compose(inner)
        self.assertEqual(result.order, 7)
        self.assertEqual(
            result, QSeries(RATIONALS, {0: 1, 2: 1, 4: 1, 6: 1}, 7)
        )

    def test_compose_keeps_inner_type(self):
        inner = XSeries(RATIONALS, {1: 1, 2: 1}, 4)
        self.assertIsInstance(geometric(4).compose(inner), XSeries)

    def test_compose_needs_positive_valuation(self):
        with self.assertRaises(BadValuation):
            geometric(3).compose(geometric(3))

    def test_comp_inverse(self):
        f = QSeries(RATIONALS, {1: 1, 2: 1}, 6)
        g = f.comp_inverse()
        catalan = [1, 1, 2, 5, 14, 42]
        self.assertEqual(
            g,
            QSeries(
                RATIONALS,
                {n + 1: (-1) ** n * c for n, c in enumerate(catalan)},
                6,
            ),
        )
        self.assertEqual(f.compose(g), QSeries.gen(RATIONALS, 6))

    def test_comp_inverse_needs_unit_linear_term(self):
        one_plus_y = ULaurent({2: 1, 0: 1})
        with self.assertRaises(NonUnitLinear):
            QSeries(ULAURENTS, {1: one_plus_y}, 4).comp_inverse()


class TestDivision(unittest.TestCase):
    def test_exact_divide_by_non_unit(self):
        y_minus_1 = ULaurent({2: 1, 0: -1})
        f = QSeries(ULAURENTS, {1: y_minus_1, 2: ULaurent({4: 1, 0: -1})}, 3)
        self.assertEqual(
            f.exact_divide(y_minus_1),
            QSeries(ULAURENTS, {1: 1, 2: ULaurent({2: 1, 0: 1})}, 3),
        )

    def test_series_quotient(self):
        f = QSeries(RATIONALS, {1: 1}, 5)
        g = QSeries(RATIONALS, {0: 1, 1: -1}, 5)
        self.assertEqual(f / g, geometric(5).shift(1).truncate(5))


class TestResidues(unittest.TestCase):
    def test_lagrange_matches_newton(self):
        f = QSeries(RATIONALS, {1: 1, 2: 1}, 6)
        g = f.comp_inverse()
        for n in range(1, 7):
            self.assertEqual(lagrange_coefficient(f, n), g.coeff(n))
        with self.assertRaises(OutOfRange):
            lagrange_coefficient(f, 0)

    def test_residue_expansion_of_a_square(self):
        g = QSeries(RATIONALS, {1: 1, 2: 1}, 6)
        f = g * g
        coefficients = residue_expansion(f, g, 3)
        self.assertEqual(coefficients, [0, 0, 1, 0])
        self.assertTrue(reconstruct(coefficients, g).agrees_with(f, 4))

    def test_residue_expansion_stays_within_known_order(self):
        g = QSeries(RATIONALS, {1: 1, 2: 1}, 4)
        f = QSeries.one(RATIONALS, 4) + g
        self.assertEqual(residue_expansion(f, g, 3), [1, 1, 0, 0])
        with self.assertRaises(OutOfRange):
            residue_expansion(f, g, 4)


if __name__ == "__main__":
    unittest.main()
