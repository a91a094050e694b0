from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List

from modules.qseries.qseries import QSeries, XSeries
from modules.qseries.residues import lagrange_coefficient
from modules.ring_core.coefficient_rings import (
    RATIONALS,
    UFRACTIONS,
    ULAURENTS,
)
from modules.ring_core.errors import QSeriesError
from modules.ring_core.ulaurent import ULaurent
from modules.verification.check_report import CheckReport, compare_series
from utils.qjf_logger import qjf_log


@lru_cache(maxsize=16)
def x_of_q(order: int) -> QSeries:
    """x(q) = sum_{n>0} [n]_y q^n / n."""
    terms = {
        n: ULaurent.quantum_integer(n) * Fraction(1, n)
        for n in range(1, order + 1)
    }
    return QSeries(ULAURENTS, terms, order)


@lru_cache(maxsize=16)
def x_of_q_log(order: int) -> QSeries:
    """(log(1 - u q) - log(1 - q/u)) / (1/u - u)."""
    u = ULaurent.u()
    first = QSeries(ULAURENTS, {0: 1, 1: -u}, order).log()
    second = QSeries(ULAURENTS, {0: 1, 1: -u.reflect()}, order).log()
    return (first - second).exact_divide(-ULaurent.u_minus_u_inverse())


def _as_x_series(series: QSeries) -> XSeries:
    return XSeries(series.ring, dict(series.items()), series.order)


@lru_cache(maxsize=16)
def q_of_x_newton(order: int) -> XSeries:
    """Compositional inverse of x(q) by Newton iteration."""
    return _as_x_series(x_of_q(order).comp_inverse())


@lru_cache(maxsize=16)
def q_of_x_closed(order: int) -> XSeries:
    """q(x) = u (1 - e) / (1 - u^2 e) with e = exp(x (u - 1/u)).

    Evaluated over the fraction field; every coefficient must clear to a
    Laurent polynomial.
    """
    u = ULaurent.u()
    e = XSeries(ULAURENTS, {1: ULaurent.u_minus_u_inverse()}, order).exp()
    numerator = (1 - e) * u
    denominator = 1 - e * ULaurent.y()
    quotient = numerator.in_ring(UFRACTIONS).exact_divide(
        denominator.in_ring(UFRACTIONS)
    )
    return _as_x_series(quotient.in_ring(ULAURENTS))


@lru_cache(maxsize=16)
def genus_series(order: int) -> XSeries:
    """X_{-y}(x) = x / q(x)."""
    return _as_x_series(q_of_x_newton(order + 1).shift(-1).inverse())


def x_of_q_y1(order: int) -> QSeries:
    """x(q) at y = 1: q / (1 - q)."""
    return QSeries(RATIONALS, {n: 1 for n in range(1, order + 1)}, order)


def q_of_x_y1(order: int) -> XSeries:
    """q(x) at y = 1: x / (1 + x)."""
    return XSeries(
        RATIONALS,
        {n: (-1) ** (n + 1) for n in range(1, order + 1)},
        order,
    )


def specialize_y1(series: QSeries) -> QSeries:
    """Evaluate ULaurent coefficients at u = 1."""
    return series.map_coefficients(lambda c: c.evaluate(1), RATIONALS)


@dataclass(frozen=True)
class ChangeOfVariable:
    x_of_q: QSeries
    q_of_x: XSeries

    @property
    def order(self) -> int:
        return min(self.x_of_q.order, self.q_of_x.order)


def change_of_variable(order: int, x_order: int) -> ChangeOfVariable:
    """x(q) to q^order and q(x) to x^x_order; the Newton inverse is
    cross-checked against the exponential closed form."""
    try:
        newton = q_of_x_newton(x_order)
        closed = q_of_x_closed(x_order)
        difference = newton.first_difference(closed)
        if difference is not None:
            raise QSeriesError(
                f"q(x) constructions differ at x^{difference}"
            )
        return ChangeOfVariable(x_of_q(order), newton)
    except Exception as e:
        qjf_log.error(f"change_of_variable error: {e}")
        raise e


def inversion_checks(order: int) -> List[CheckReport]:
    """x(q(x)) = x, q(x(q)) = q, the log form of x(q) and Lagrange
    coefficients against the Newton inverse."""
    x = x_of_q(order)
    q = q_of_x_newton(order)
    reports = [
        compare_series(
            "x(q(x)) = x",
            x.compose(q),
            XSeries.gen(ULAURENTS, order),
            order,
        ),
        compare_series(
            "q(x(q)) = q", q.compose(x), QSeries.gen(ULAURENTS, order), order
        ),
        compare_series("x(q) log form", x_of_q_log(order), x, order),
        compare_series("q(x) closed form", q_of_x_closed(order), q, order),
    ]
    lagrange = XSeries(
        ULAURENTS,
        {n: lagrange_coefficient(x, n) for n in range(1, order + 1)},
        order,
    )
    reports.append(
        compare_series("Lagrange coefficients of q(x)", lagrange, q, order)
    )
    return reports


__all__ = [
    "ChangeOfVariable",
    "change_of_variable",
    "x_of_q",
    "x_of_q_log",
    "q_of_x_newton",
    "q_of_x_closed",
    "genus_series",
    "x_of_q_y1",
    "q_of_x_y1",
    "specialize_y1",
    "inversion_checks",
]
