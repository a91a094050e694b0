from fractions import Fraction
from math import factorial
from typing import List

from sympy import binomial

from modules.invariants.s_polynomials import S_series, s_poly
from modules.qseries.qseries import WSeries, XSeries
from modules.ring_core.coefficient_rings import UFRACTIONS, ULAURENTS
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent
from modules.verification.check_report import (
    CheckReport,
    compare_series,
    compare_values,
)
from utils.qjf_logger import qjf_log


def _y_minus_1() -> ULaurent:
    return ULaurent({2: 1, 0: -1})


def epsilon_series(w_order: int) -> WSeries:
    """eps(w) = (y e^-w - 1)(e^w - 1) / (y - 1).

    The w^m coefficient is (y (-1)^(m+1) - 1) / (m! (y - 1)).
    """
    den = UFraction(_y_minus_1())
    terms = {}
    for m in range(1, w_order + 1):
        num = ULaurent({2: (-1) ** (m + 1), 0: -1})
        terms[m] = UFraction(num) * Fraction(1, factorial(m)) / den
    return WSeries(UFRACTIONS, terms, w_order)


def z2_series(w_order: int) -> WSeries:
    """sum_n s_n / (u - 1/u)^n eps^(n+1) / (n+1), a series in eps."""
    delta = UFraction(ULaurent.u_minus_u_inverse())
    terms = {}
    for n in range(w_order):
        terms[n + 1] = (
            UFraction(s_poly(n)) * Fraction(1, n + 1) / delta**n
        )
    return WSeries(UFRACTIONS, terms, w_order)


def z2_inversion_check(w_order: int) -> List[CheckReport]:
    """The inverse of eps against the s_n series and against -S(y, x)
    with x = (1/u - u) eps."""
    try:
        inverse = epsilon_series(w_order).comp_inverse()
        expected = z2_series(w_order)
        slope = UFraction(-ULaurent.u_minus_u_inverse())
        x_of_eps = WSeries(UFRACTIONS, {1: slope}, w_order)
        minus_S = -S_series(w_order).compose(x_of_eps)
        reports = [
            compare_series(
                "inverse of eps(w)", inverse, expected, w_order
            ),
            compare_series(
                "inverse of eps(w) = -S(y, x)", inverse, minus_S, w_order
            ),
        ]
        for report in reports:
            qjf_log.debug(report.summary())
        return reports
    except Exception as e:
        qjf_log.error(f"z2_inversion_check error: {e}")
        raise e


def binomial_sum(n: int, l: int) -> int:
    return sum(
        int(binomial(n, k)) ** 2 * int(binomial(k, l)) for k in range(n + 1)
    )


def binomial_closed(n: int, l: int) -> int:
    return int(binomial(2 * n - l, n)) * int(binomial(n, l))


def residue_form(n: int) -> ULaurent:
    """(y - 1)^n Res_w eps^(-n-1)."""
    eps = epsilon_series(n + 2)
    normalized = eps.shift(-1) ** (-n - 1)
    value = normalized.coeff(n) * UFraction(_y_minus_1()) ** n
    return value.to_ulaurent()


def x_coefficient_form(n: int) -> ULaurent:
    """Coeff_{x^n} ((1 + x)(1 + x y))^n."""
    base = XSeries(ULAURENTS, {0: 1, 1: 1 + ULaurent.y(), 2: ULaurent.y()}, n)
    return (base**n).coeff(n)


def binomial_form(n: int) -> ULaurent:
    """sum_l C(n, l) C(2n - l, n) (y - 1)^l."""
    total = ULaurent.zero()
    for l in range(n + 1):
        total = total + _y_minus_1() ** l * binomial_closed(n, l)
    return total


def binom_identity_check(nmax: int) -> List[CheckReport]:
    try:
        reports = []
        failure = None
        for n in range(nmax + 1):
            for l in range(n + 1):
                if binomial_sum(n, l) != binomial_closed(n, l):
                    failure = (n, l)
                    break
            if failure:
                break
        name = "sum C(n,k)^2 C(k,l) = C(2n-l,n) C(n,l)"
        if failure is None:
            reports.append(CheckReport(name, True, nmax))
        else:
            reports.append(
                CheckReport(name, False, nmax, None, f"n, l = {failure}")
            )
        for n in range(nmax + 1):
            closed = binomial_form(n)
            for label, value in (
                ("residue", residue_form(n)),
                ("x-coefficient", x_coefficient_form(n)),
            ):
                report = compare_values(
                    f"{label} form n = {n}", value, closed, n
                )
                if not report:
                    reports.append(report)
        if len(reports) == 1:
            reports.append(
                CheckReport("three residue forms agree", True, nmax)
            )
        return reports
    except Exception as e:
        qjf_log.error(f"binom_identity_check error: {e}")
        raise e


__all__ = [
    "epsilon_series",
    "z2_series",
    "z2_inversion_check",
    "binomial_sum",
    "binomial_closed",
    "residue_form",
    "x_coefficient_form",
    "binomial_form",
    "binom_identity_check",
]
