from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import divisors

from modules.forms.euler_products import eta_power, euler_product, theta_pair
from modules.forms.theta_engine import (
    ThetaArgument,
    discriminant_factored,
    theta_prime_0,
    theta_product,
    theta_quotient,
)
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import RATIONALS, ULAURENTS
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log


@dataclass(frozen=True)
class FormSeries:
    name: str
    series: QSeries

    @property
    def order(self) -> int:
        return self.series.order


def y_minus_2_plus_inverse() -> ULaurent:
    """y - 2 + 1/y = (u - 1/u)^2."""
    return ULaurent.u_minus_u_inverse() ** 2


@lru_cache(maxsize=16)
def eisenstein_g2(order: int) -> QSeries:
    """G2 = -1/24 + sum sigma_1(n) q^n."""
    terms = {0: Fraction(-1, 24)}
    for n in range(1, order + 1):
        terms[n] = int(sum(divisors(n)))
    return QSeries(RATIONALS, terms, order)


@lru_cache(maxsize=16)
def discriminant(order: int) -> QSeries:
    """Delta = q prod (1 - q^n)^24."""
    return eta_power(24, order - 1).shift(1)


@lru_cache(maxsize=16)
def tilde_delta_product(order: int) -> QSeries:
    """q prod (1-q^n)^20 (1-q^n y)^2 (1-q^n/y)^2."""
    factors = [(None, 20)] + theta_pair((0, 2), 2)
    return euler_product(factors, order - 1).shift(1)


@lru_cache(maxsize=16)
def tilde_delta_quotient(order: int) -> QSeries:
    """Delta theta(y)^2 / ((y - 2 + 1/y) theta'(0)^2)."""
    theta = theta_product(ThetaArgument.Y, order - 1)
    prime = theta_prime_0(order - 1)
    return theta_quotient(
        [discriminant_factored(order - 1), theta, theta],
        [prime, prime],
        scalar_den=y_minus_2_plus_inverse(),
    )


@lru_cache(maxsize=16)
def phi_10_1_product(order: int) -> QSeries:
    """q (t - 2 + 1/t) prod (1-q^n)^20 (1-q^n t)^2 (1-q^n/t)^2."""
    factors = [(None, 20)] + theta_pair((1, 0), 2)
    product = euler_product(factors, order - 1).shift(1)
    t = ThetaArgument.T_FORMAL
    return product * ((t.power(1) - 1) ** 2 * t.power(-1))


@lru_cache(maxsize=16)
def phi_10_1_quotient(order: int) -> QSeries:
    """Delta theta(t)^2 / theta'(0)^2."""
    theta = theta_product(ThetaArgument.T_FORMAL, order - 1)
    prime = theta_prime_0(order - 1)
    return theta_quotient(
        [discriminant_factored(order - 1), theta, theta], [prime, prime]
    )


def dlog_theta_ratio(argument: ThetaArgument, order: int) -> QSeries:
    """D log(theta'(0) / theta(m))."""
    return (
        theta_prime_0(order).log_derivative()
        - theta_product(argument, order).log_derivative()
    )


@lru_cache(maxsize=16)
def tilde_dg2_sum(order: int) -> QSeries:
    """sum_{n, d > 0} n [d]_y^2 q^(nd)."""
    terms = {}
    for m in range(1, order + 1):
        total = ULaurent.zero()
        for d in divisors(m):
            total = total + ULaurent.quantum_integer(d) ** 2 * (m // d)
        terms[m] = total
    return QSeries(ULAURENTS, terms, order)


@lru_cache(maxsize=16)
def tilde_dg2_theta(order: int) -> QSeries:
    """D log(theta'(0)/theta(y)) / (y - 2 + 1/y)."""
    return dlog_theta_ratio(ThetaArgument.Y, order).exact_divide(
        y_minus_2_plus_inverse()
    )


class FormsEngine:
    """Modular and Jacobi building blocks through q^order."""

    def __init__(self, order: int) -> None:
        try:
            if order < 1:
                raise ValueError(f"order must be positive, got {order}")
            self.order = order
        except Exception as e:
            qjf_log.error(f"FormsEngine __init__ error: {e}")
            raise e

    def __enter__(self) -> "FormsEngine":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def eisenstein_g2(self) -> FormSeries:
        return FormSeries("G2", eisenstein_g2(self.order))

    def discriminant(self) -> FormSeries:
        return FormSeries("Delta", discriminant(self.order))

    def theta_prime_0(self) -> FormSeries:
        return FormSeries("theta'(0)", theta_prime_0(self.order).hat())

    def phi_10_1(self, construction: str = "product") -> FormSeries:
        try:
            if construction == "product":
                series = phi_10_1_product(self.order)
            elif construction == "quotient":
                series = phi_10_1_quotient(self.order)
            else:
                raise ValueError(f"unknown construction {construction}")
            return FormSeries("phi_10_1", series)
        except Exception as e:
            qjf_log.error(f"FormsEngine phi_10_1 error: {e}")
            raise e

    def tilde_delta(self, construction: str = "product") -> FormSeries:
        try:
            if construction == "product":
                series = tilde_delta_product(self.order)
            elif construction == "quotient":
                series = tilde_delta_quotient(self.order)
            else:
                raise ValueError(f"unknown construction {construction}")
            return FormSeries("tildeDelta", series)
        except Exception as e:
            qjf_log.error(f"FormsEngine tilde_delta error: {e}")
            raise e

    def tilde_dg2(self, construction: str = "sum") -> FormSeries:
        try:
            if construction == "sum":
                series = tilde_dg2_sum(self.order)
            elif construction == "theta":
                series = tilde_dg2_theta(self.order)
            else:
                raise ValueError(f"unknown construction {construction}")
            return FormSeries("tildeDG2", series)
        except Exception as e:
            qjf_log.error(f"FormsEngine tilde_dg2 error: {e}")
            raise e


__all__ = [
    "FormSeries",
    "FormsEngine",
    "eisenstein_g2",
    "discriminant",
    "tilde_delta_product",
    "tilde_delta_quotient",
    "phi_10_1_product",
    "phi_10_1_quotient",
    "dlog_theta_ratio",
    "tilde_dg2_sum",
    "tilde_dg2_theta",
    "y_minus_2_plus_inverse",
]
