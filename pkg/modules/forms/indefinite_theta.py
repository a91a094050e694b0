from fractions import Fraction
from functools import lru_cache

from sympy import divisors

from modules.forms.form_series import eisenstein_g2
from modules.forms.theta_engine import ThetaArgument, theta_product
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import ULAURENTS
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log


@lru_cache(maxsize=16)
def a_lattice_sum(order: int) -> QSeries:
    """A(y, q) = sum_{nd > 0} sgn(d) n^2 y^d q^(nd)."""
    terms = {}
    for m in range(1, order + 1):
        total = {}
        for d in divisors(m):
            n = m // d
            # (n, d) and (-n, -d)
            total[2 * d] = total.get(2 * d, 0) + n * n
            total[-2 * d] = total.get(-2 * d, 0) - n * n
        terms[m] = ULaurent(total)
    return QSeries(ULAURENTS, terms, order)


@lru_cache(maxsize=16)
def a_from_theta(order: int) -> QSeries:
    """(-theta'''/3 - 2 G2 theta') / theta at the argument y."""
    theta = theta_product(ThetaArgument.Y, order)
    first = theta.derivative(1).hat()
    third = theta.derivative(3).hat()
    g2 = eisenstein_g2(order)
    numerator = third * Fraction(-1, 3) - g2 * first * 2
    return numerator.exact_divide(theta.hat())


def a_from_heat_equation(order: int, factor=Fraction(-2, 3)) -> QSeries:
    """(factor (D + 1/8) theta' - 2 G2 theta') / theta.

    With theta''' = 2 D theta' the matching factor is -2/3.
    """
    try:
        theta = theta_product(ThetaArgument.Y, order)
        prime = theta.derivative(1)
        g2 = eisenstein_g2(order)
        numerator = prime.apply_D().hat() * factor - g2 * prime.hat() * 2
        return numerator.exact_divide(theta.hat())
    except Exception as e:
        qjf_log.error(f"a_from_heat_equation error: {e}")
        raise e


__all__ = ["a_lattice_sum", "a_from_theta", "a_from_heat_equation"]
