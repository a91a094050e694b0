import unittest
from fractions import Fraction

import numpy as np

from modules.ring_core.coefficient_rings import (
    RATIONALS,
    TLAURENTS,
    UFRACTIONS,
    ULAURENTS,
    TSeriesRing,
    join,
)
from modules.ring_core.errors import (
    DenominatorNotCleared,
    NonDivisible,
    NonMonomialTarget,
    NotSymmetric,
    OutOfRange,
)
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries, inverse_x
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent, substitute_y
from modules.ring_core.v_polynomial import symmetrize_to_v


def random_ulaurent(rng, size: int = 3) -> ULaurent:
    exponents = rng.integers(-3, 4, size=size)
    values = rng.integers(-6, 7, size=size)
    dens = rng.integers(1, 4, size=size)
    terms = {}
    for e, v, d in zip(exponents, values, dens):
        terms[int(e)] = terms.get(int(e), 0) + Fraction(int(v), int(d))
    return ULaurent(terms)


def random_tlaurent(rng, size: int = 3) -> TLaurent:
    keys = rng.integers(-2, 3, size=(size, 2))
    values = rng.integers(-6, 7, size=size)
    terms = {}
    for (t, u), v in zip(keys, values):
        key = (int(t), int(u))
        terms[key] = terms.get(key, 0) + int(v)
    return TLaurent(terms)


class TestULaurent(unittest.TestCase):
    def test_quantum_integer(self):
        self.assertEqual(
            ULaurent.quantum_integer(3), ULaurent({2: 1, 0: 1, -2: 1})
        )
        self.assertEqual(
            ULaurent.quantum_integer(-2), -ULaurent.quantum_integer(2)
        )
        self.assertFalse(ULaurent.quantum_integer(0))
        self.assertTrue(ULaurent.quantum_integer(4).is_palindromic())

    def test_rational_coefficients_are_canonical(self):
        half_u = ULaurent({1: Fraction(1, 2)})
        self.assertEqual(half_u * 2, ULaurent.u())
        self.assertEqual(half_u + half_u, ULaurent.u())

    def test_exact_divide(self):
        y2_minus_1 = ULaurent({4: 1, 0: -1})
        y_minus_1 = ULaurent({2: 1, 0: -1})
        self.assertEqual(
            y2_minus_1.exact_divide(y_minus_1), ULaurent({2: 1, 0: 1})
        )
        with self.assertRaises(NonDivisible):
            ULaurent({2: 1, 0: 1}).exact_divide(y_minus_1)

    def test_y_derivative_and_evaluate(self):
        y = ULaurent.y()
        self.assertEqual(y.y_derivative(), y)
        self.assertEqual((y * y).y_derivative(), (y * y) * 2)
        self.assertEqual(ULaurent.quantum_integer(3).evaluate(1), 3)
        self.assertEqual(
            ULaurent.quantum_integer(3).evaluate(2), Fraction(21, 4)
        )

    def test_as_y_polynomial(self):
        self.assertEqual(
            ULaurent({2: 1, -2: 1}).as_y_polynomial(), ULaurent({1: 1, -1: 1})
        )
        with self.assertRaises(NonMonomialTarget):
            ULaurent.u().as_y_polynomial()

    def test_substitute_y(self):
        target = TLaurent.monomial(1, 1)
        self.assertEqual(
            substitute_y(ULaurent.y(), target), TLaurent.monomial(2, 2)
        )
        self.assertEqual(
            substitute_y(ULaurent({2: 1, -2: -1}), target),
            TLaurent({(2, 2): 1, (-2, -2): -1}),
        )
        self.assertEqual(
            substitute_y(ULaurent({1: 1, -1: 1}), TLaurent.monomial(-1, 1)),
            TLaurent({(-1, 1): 1, (1, -1): 1}),
        )
        euler = substitute_y(ULaurent({2: 1, 0: 4, -2: 1}), 1)
        self.assertEqual(euler.to_ulaurent(), ULaurent.constant(6))
        self.assertFalse(substitute_y(ULaurent({1: 1, -1: -1}), 1))
        with self.assertRaises(NonMonomialTarget):
            substitute_y(ULaurent.y(), TLaurent.monomial(1, 1, 2))


class TestUFraction(unittest.TestCase):
    def test_reduces_to_lowest_terms(self):
        quotient = UFraction(ULaurent({4: 1, 0: -1}), ULaurent({2: 1, 0: -1}))
        self.assertTrue(quotient.is_laurent())
        self.assertEqual(quotient.to_ulaurent(), ULaurent({2: 1, 0: 1}))

    def test_denominator_must_clear(self):
        with self.assertRaises(DenominatorNotCleared):
            UFraction(1, ULaurent({2: 1, 0: -1})).to_ulaurent()

    def test_arithmetic_and_evaluate(self):
        y = ULaurent.y()
        ratio = UFraction(y + 1, y - 1)
        self.assertEqual(ratio.evaluate(2), Fraction(5, 3))
        self.assertEqual(ratio - ratio, UFraction.zero())
        with self.assertRaises(ZeroDivisionError):
            UFraction(1, 0)


class TestTLaurent(unittest.TestCase):
    def test_x_vanishes_at_t_equal_u(self):
        x = TLaurent.x()
        self.assertTrue(x.is_t_symmetric())
        self.assertFalse(x.specialize_t_to_u())

    def test_exact_divide(self):
        x = TLaurent.x()
        self.assertEqual((x * x).exact_divide(x), x)
        with self.assertRaises(NonDivisible):
            TLaurent.t().exact_divide(TLaurent({(1, 0): 1, (0, 0): 1}))

    def test_coefficients_by_t_power(self):
        x = TLaurent.x()
        self.assertEqual(x.coefficient(1), ULaurent.one())
        self.assertEqual(x.coefficient(0), -ULaurent({1: 1, -1: 1}))
        self.assertEqual(x.t_exponents(), [-1, 0, 1])


class TestTSeries(unittest.TestCase):
    def test_inverse_of_x(self):
        inverse = inverse_x(5)
        self.assertEqual(inverse.t_order, 5)
        self.assertEqual(inverse.lead, 1)
        for n in range(5):
            self.assertEqual(
                inverse.coefficient(n + 1), ULaurent.quantum_integer(n + 1)
            )
        with self.assertRaises(OutOfRange):
            inverse.coefficient(6)

    def test_product_precision(self):
        t = TSeries.from_tlaurent(TLaurent.t(), 5)
        self.assertEqual((t * t).t_order, 6)
        self.assertEqual((t * TLaurent.x()).t_order, 4)

    def test_inverse_times_self(self):
        x = TSeries.from_tlaurent(TLaurent.x(), 4)
        product = x * x.inverse()
        self.assertTrue(product.agrees_with(TSeries.one(product.t_order)))


class TestVPolynomial(unittest.TestCase):
    def test_x_is_linear_in_v(self):
        poly = symmetrize_to_v(TLaurent.x())
        self.assertEqual(poly.degree, 1)
        self.assertEqual(poly[1], ULaurent.one())
        w = ULaurent({1: 1, -1: 1})
        self.assertEqual(poly.taylor_shift(w), [ULaurent.zero(), 1])

    def test_round_trip(self):
        p = TLaurent.x() ** 3
        self.assertEqual(symmetrize_to_v(p).to_tlaurent(), p)

    def test_needs_symmetry(self):
        with self.assertRaises(NotSymmetric):
            symmetrize_to_v(TLaurent.t())


class TestRandomizedAxioms(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(2024)

    def test_ulaurent_ring_axioms(self):
        for _ in range(20):
            a, b, c = (random_ulaurent(self.rng) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a - a, ULaurent.zero())

    def test_tlaurent_ring_axioms(self):
        for _ in range(20):
            a, b, c = (random_tlaurent(self.rng) for _ in range(3))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_exact_divide_recovers_factor(self):
        for _ in range(20):
            a, b = random_ulaurent(self.rng), random_ulaurent(self.rng)
            if b:
                self.assertEqual((a * b).exact_divide(b), a)
            s, t = random_tlaurent(self.rng), random_tlaurent(self.rng)
            if t:
                self.assertEqual((s * t).exact_divide(t), s)

    def test_canonical_form_is_idempotent(self):
        for _ in range(20):
            a = random_ulaurent(self.rng)
            self.assertEqual(repr(ULaurent(a.terms)), repr(a))
            b = random_ulaurent(self.rng)
            c = random_ulaurent(self.rng)
            if not b or not c:
                continue
            r = UFraction(a, b)
            again = UFraction(r.num, r.den)
            self.assertEqual((again.num, again.den), (r.num, r.den))
            self.assertEqual(UFraction(a * c, b * c), r)


class TestCoefficientRings(unittest.TestCase):
    def test_join(self):
        self.assertIs(join(RATIONALS, ULAURENTS), ULAURENTS)
        self.assertIs(join(ULAURENTS, TLAURENTS), TLAURENTS)
        self.assertEqual(join(TLAURENTS, TSeriesRing(4)), TSeriesRing(4))
        with self.assertRaises(TypeError):
            join(UFRACTIONS, TLAURENTS)


if __name__ == "__main__":
    unittest.main()
