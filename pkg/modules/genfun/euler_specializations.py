"""y = 1 specializations of the generating series.

At y = 1 the series reduce to theta quotients in t alone:

    A = DD log(theta'(0)/theta(t))      H = D log(theta'(0)/theta(t))
    X = H / (1 + H)                     K = 1 / phi_10_1

The closed forms give a fast path; the checks compare them with the
exact series evaluated at u = 1.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List

from sympy import binomial

from modules.forms.euler_products import euler_product, theta_pair
from modules.forms.form_series import dlog_theta_ratio, phi_10_1_product
from modules.forms.theta_engine import ThetaArgument
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import (
    RATIONALS,
    TLAURENTS,
    TSeriesRing,
    ULAURENTS,
)
from modules.ring_core.scaled_laurent import Scalar
from modules.verification.check_report import CheckReport, compare_series
from utils.qjf_logger import qjf_log

Y1_NAMES = ("A", "H", "X", "K")


def specialize_u(series: QSeries, u_value: Scalar) -> QSeries:
    """Evaluate u at a rational in every coefficient."""
    u_value = Fraction(u_value)
    if series.ring is ULAURENTS:
        return series.map_coefficients(
            lambda c: c.evaluate(u_value), RATIONALS
        )
    if series.ring is RATIONALS:
        return series
    return series.map_coefficients(lambda c: c.specialize_u(u_value))


@lru_cache(maxsize=16)
def h_at_y1(order: int) -> QSeries:
    """D log(theta'(0)/theta(t))."""
    return dlog_theta_ratio(ThetaArgument.T_FORMAL, order)


def a_at_y1(order: int) -> QSeries:
    return h_at_y1(order).D()


def x_at_y1(order: int) -> QSeries:
    h = h_at_y1(order)
    return h * (1 + h).inverse()


@lru_cache(maxsize=16)
def xk_at_y1(order: int) -> QSeries:
    """x K at y = 1, i.e. 1/(q prod (1-q^n)^20 (1-q^n t)^2 (1-q^n/t)^2)."""
    factors = [(None, 20)] + theta_pair(ThetaArgument.T_FORMAL.value, 2)
    return euler_product(factors, order + 1).inverse().shift(-1)


def k_at_y1(order: int, t_order: int) -> QSeries:
    """1/phi_10_1 expanded in t through t^t_order."""
    budget = t_order + 2 * order + 4
    phi = phi_10_1_product(order + 2).in_ring(TSeriesRing(budget))
    inverse = phi.inverse()
    return inverse.map_coefficients(
        lambda c: c.truncate(t_order), TSeriesRing(t_order)
    )


def series_at_y1(name: str, order: int, t_order: int) -> QSeries:
    """Closed form of A, H, X or K at y = 1."""
    try:
        if name == "A":
            return a_at_y1(order)
        if name == "H":
            return h_at_y1(order)
        if name == "X":
            return x_at_y1(order)
        if name == "K":
            return k_at_y1(order, t_order)
        raise ValueError(f"no y = 1 closed form for {name}")
    except Exception as e:
        qjf_log.error(f"series_at_y1 error: {e}")
        raise e


def euler_checks(order: int, t_order: int) -> List[CheckReport]:
    """Exact series at u = 1 against the closed forms."""
    from modules.genfun.genfun_engine import GenFunEngine

    engine = GenFunEngine(order, t_order)
    reports = []
    for name in ("A", "H", "X"):
        exact = specialize_u(engine.series(name).series, 1)
        reports.append(
            compare_series(
                f"{name} at y = 1", exact, series_at_y1(name, order, t_order)
            )
        )
    reports.append(
        compare_series(
            "xK at y = 1",
            specialize_u(engine.series_xK().series, 1),
            xk_at_y1(order),
            order,
        )
    )
    k_exact = specialize_u(engine.series_K().series, 1)
    phi = phi_10_1_product(order + 2)
    product = k_exact * phi
    reports.append(
        compare_series(
            "K phi_10_1 = 1 at y = 1",
            product,
            QSeries.one(product.ring, product.order),
        )
    )
    reports.append(
        compare_series(
            "K at y = 1 against 1/phi_10_1",
            k_exact,
            k_at_y1(order, t_order),
            order,
        )
    )
    return reports


def mpt_check(k: int, order: int, flip_signs: bool = False) -> CheckReport:
    """(H/(1+H))^k = sum_m (-1)^m C(m+k-1, k-1) H^(m+k) at y = 1."""
    try:
        h = h_at_y1(order)
        name = f"MPT expansion k = {k}"
        if k == 0:
            one = QSeries.one(TLAURENTS, order)
            return compare_series(name, one, one, order)
        lhs = x_at_y1(order) ** k
        sign = 1 if flip_signs else -1
        rhs = QSeries.zero(TLAURENTS, order)
        for m in range(order - k + 1):
            c = int(binomial(m + k - 1, k - 1)) * sign**m
            rhs = rhs + h ** (m + k) * c
        report = compare_series(name, lhs, rhs, order)
        qjf_log.debug(report.summary())
        return report
    except Exception as e:
        qjf_log.error(f"mpt_check error: {e}")
        raise e


__all__ = [
    "Y1_NAMES",
    "specialize_u",
    "h_at_y1",
    "a_at_y1",
    "x_at_y1",
    "k_at_y1",
    "xk_at_y1",
    "series_at_y1",
    "euler_checks",
    "mpt_check",
]
