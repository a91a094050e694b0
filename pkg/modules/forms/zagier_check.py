from sympy import divisors

from modules.forms.theta_engine import (
    ThetaArgument,
    theta_prime_0,
    theta_product,
)
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import TLAURENTS
from modules.ring_core.tlaurent import TLaurent
from modules.verification.check_report import CheckReport, compare_series
from utils.qjf_logger import qjf_log


def _lattice_sum_y1_y2(order: int) -> QSeries:
    """sum_{nd > 0} sgn(d) y1^n y2^d q^(nd) at y1 = t u, y2 = u / t."""
    terms = {}
    for m in range(1, order + 1):
        total = TLaurent.zero()
        for d in divisors(m):
            n = m // d
            total = total + TLaurent.monomial(n - d, n + d)
            total = total - TLaurent.monomial(d - n, -n - d)
        terms[m] = total
    return QSeries(TLAURENTS, terms, order)


def zagier_identity_check(
    order: int, t_window: int, drop_sum: bool = False
) -> CheckReport:
    """theta'(0) theta(y1 y2) (y1-1)(y2-1)
    = theta(y1) theta(y2) [(y1 y2 - 1) - (y1-1)(y2-1) S]

    with every theta replaced by its body (y - 1) prod (...), which is the
    denominator-cleared form of Zagier's two-variable identity.
    """
    try:
        y1 = ThetaArgument.Y1.power(1)
        y2 = ThetaArgument.Y2.power(1)
        bar_y1 = theta_product(ThetaArgument.Y1, order).body
        bar_y2 = theta_product(ThetaArgument.Y2, order).body
        bar_y = theta_product(ThetaArgument.Y, order).body
        prime = theta_prime_0(order).hat()
        lhs = prime * bar_y * ((y1 - 1) * (y2 - 1))
        bracket = QSeries.constant(TLAURENTS, y1 * y2 - 1, order)
        if not drop_sum:
            bracket = bracket - _lattice_sum_y1_y2(order) * (
                (y1 - 1) * (y2 - 1)
            )
        rhs = bar_y1 * bar_y2 * bracket
        report = compare_series(
            "zagier identity", lhs, rhs, order, t_window
        )
        qjf_log.debug(report.summary())
        return report
    except Exception as e:
        qjf_log.error(f"zagier_identity_check error: {e}")
        raise e


__all__ = ["zagier_identity_check"]
