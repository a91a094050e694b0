from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import divisors

from modules.forms.euler_products import euler_product, theta_pair
from modules.forms.indefinite_theta import a_from_theta
from modules.forms.theta_engine import (
    ThetaArgument,
    discriminant_factored,
    theta_prime_0,
    theta_product,
    theta_quotient,
)
from modules.genfun.change_of_variable import genus_series, q_of_x_newton
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import TLAURENTS, ULAURENTS
from modules.ring_core.errors import PolynomialityWindowError
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log

A_CONSTRUCTIONS = ("quantum", "divisor", "theta", "sheaf")
X_CONSTRUCTIONS = ("compose", "genus")


@dataclass(frozen=True)
class GenSeries:
    """One of the generating series A, K, H, X (or a combination)."""

    kind: str
    series: QSeries
    t_order: Optional[int] = None

    @property
    def order(self) -> int:
        return self.series.order

    def coeff(self, m: int):
        return self.series.coeff(m)


def _quantum_pair(d: int) -> TLaurent:
    """[d]_{t y^(1/2)} [d]_{t y^(-1/2)} = sum_{i,j<d} t^(d-1-i-j) u^(j-i)."""
    terms = {}
    for i in range(d):
        for j in range(d):
            key = (d - 1 - i - j, j - i)
            terms[key] = terms.get(key, 0) + 1
    return TLaurent(terms)


def _t_d_bracket(d: int) -> TLaurent:
    """t^d + t^-d - u^d - u^-d."""
    return TLaurent({(d, 0): 1, (-d, 0): 1, (0, d): -1, (0, -d): -1})


@lru_cache(maxsize=16)
def a_from_quantum_product(order: int) -> QSeries:
    """x * sum_{n,d>0} n^2 [d]_y [d]_{ty^(1/2)} [d]_{ty^(-1/2)} q^(nd)."""
    terms = {}
    for m in range(1, order + 1):
        total = TLaurent.zero()
        for d in divisors(m):
            n = m // d
            total = total + _quantum_pair(d) * ULaurent.quantum_integer(
                d
            ) * (n * n)
        terms[m] = total * TLaurent.x()
    return QSeries(TLAURENTS, terms, order)


@lru_cache(maxsize=16)
def a_from_divisor_sum(order: int) -> QSeries:
    """sum_{n,d>0} n^2 [d]_y (t^d + t^-d - u^d - u^-d) q^(nd)."""
    terms = {}
    for m in range(1, order + 1):
        total = TLaurent.zero()
        for d in divisors(m):
            n = m // d
            total = total + _t_d_bracket(d) * ULaurent.quantum_integer(d) * (
                n * n
            )
        terms[m] = total
    return QSeries(TLAURENTS, terms, order)


@lru_cache(maxsize=16)
def a_from_indefinite_theta(order: int) -> QSeries:
    """(A(t y^(1/2), q) + A(y^(1/2)/t, q) - A(y, q)) / (u - 1/u).

    A(y, q) is taken in its theta-derivative form, not as a divisor sum.
    """
    lattice = a_from_theta(order)
    numerator = QSeries(
        TLAURENTS,
        {
            m: c.as_y_polynomial().substitute(1, 1)
            + c.as_y_polynomial().substitute(-1, 1)
            - c
            for m, c in lattice.items()
        },
        order,
    )
    return numerator.exact_divide(ULaurent.u_minus_u_inverse())


def a_from_sheaf_count(order: int) -> QSeries:
    """sum_{g>=2} f_g(y, t) q^(g-1)."""
    from modules.invariants.fg_formula import fg_series

    return fg_series(order)


@lru_cache(maxsize=16)
def k_from_theta(order: int, t_order: int) -> QSeries:
    """(u^-1 - u) theta'(0)^3 / (Delta theta(u/t) theta(t u) theta(y))."""
    inner = order + 1
    prime = theta_prime_0(inner)
    return theta_quotient(
        [prime, prime, prime],
        [
            discriminant_factored(inner),
            theta_product(ThetaArgument.Y2, inner),
            theta_product(ThetaArgument.Y1, inner),
            theta_product(ThetaArgument.Y, inner),
        ],
        scalar=-ULaurent.u_minus_u_inverse(),
        t_order=t_order,
    )


@lru_cache(maxsize=16)
def x_times_k(order: int) -> QSeries:
    """x K = 1/(q F) with F = prod (1-q^n)^18 (1-q^n y^{+-1})
    (1-q^n (tu)^{+-1}) (1-q^n (u/t)^{+-1})."""
    factors = (
        [(None, 18)]
        + theta_pair(ThetaArgument.Y.value)
        + theta_pair(ThetaArgument.Y1.value)
        + theta_pair(ThetaArgument.Y2.value)
    )
    return euler_product(factors, order + 1).inverse().shift(-1)


def at_t_equal_u(series: QSeries, divide_by_x: bool = False) -> QSeries:
    """t -> u in every coefficient, optionally after exact division by x."""
    x = TLaurent.x()

    def specialize(c: TLaurent) -> ULaurent:
        if divide_by_x:
            c = c.exact_divide(x)
        return c.specialize_t_to_u()

    return series.map_coefficients(specialize, ULAURENTS)


def _check_t_support(series: QSeries) -> None:
    """Coefficient of q^m has t-exponents within [-m, m]."""
    for m, c in series.items():
        if c.max_t > m or c.min_t < -m:
            raise PolynomialityWindowError(
                f"q^{m} coefficient has t-support beyond |e| <= {m}"
            )


class GenFunEngine:
    """A, K, H and X through q^order, with K truncated at t^t_order."""

    def __init__(self, order: int, t_order: Optional[int] = None) -> None:
        try:
            if order < 1:
                raise ValueError(f"order must be positive, got {order}")
            self.order = order
            self.t_order = 2 * order + 4 if t_order is None else t_order
            if self.t_order < 1:
                raise ValueError(f"t-order must be positive, got {t_order}")
        except Exception as e:
            qjf_log.error(f"GenFunEngine __init__ error: {e}")
            raise e

    def __enter__(self) -> "GenFunEngine":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def series_A(self, construction: str = "divisor") -> GenSeries:
        try:
            qjf_log.debug(f"A via {construction} to q^{self.order}")
            if construction == "quantum":
                series = a_from_quantum_product(self.order)
            elif construction == "divisor":
                series = a_from_divisor_sum(self.order)
            elif construction == "theta":
                series = a_from_indefinite_theta(self.order)
            elif construction == "sheaf":
                series = a_from_sheaf_count(self.order)
            else:
                raise ValueError(f"unknown construction {construction}")
            _check_t_support(series)
            return GenSeries("A", series)
        except Exception as e:
            qjf_log.error(f"GenFunEngine series_A error: {e}")
            raise e

    def series_K(self) -> GenSeries:
        try:
            qjf_log.debug(
                f"K to q^{self.order}, t^{self.t_order} from thetas"
            )
            series = k_from_theta(self.order, self.t_order)
            return GenSeries("K", series, self.t_order)
        except Exception as e:
            qjf_log.error(f"GenFunEngine series_K error: {e}")
            raise e

    def series_xK(self) -> GenSeries:
        """x K with Laurent polynomial coefficients in t."""
        try:
            return GenSeries("xK", x_times_k(self.order))
        except Exception as e:
            qjf_log.error(f"GenFunEngine series_xK error: {e}")
            raise e

    def series_H(self) -> GenSeries:
        try:
            return GenSeries("H", self.series_A().series.Dinv())
        except Exception as e:
            qjf_log.error(f"GenFunEngine series_H error: {e}")
            raise e

    def series_X(self, construction: str = "compose") -> GenSeries:
        """X = H / X_{-y}(H), which equals q(H)."""
        try:
            h = self.series_H().series
            if construction == "compose":
                series = q_of_x_newton(self.order).compose(h)
            elif construction == "genus":
                series = h * genus_series(self.order).compose(h).inverse()
            else:
                raise ValueError(f"unknown construction {construction}")
            return GenSeries("X", series.in_ring(TLAURENTS))
        except Exception as e:
            qjf_log.error(f"GenFunEngine series_X error: {e}")
            raise e

    def series(self, name: str) -> GenSeries:
        try:
            builders = {
                "A": self.series_A,
                "K": self.series_K,
                "xK": self.series_xK,
                "H": self.series_H,
                "X": self.series_X,
            }
            if name not in builders:
                raise ValueError(f"unknown generating series {name}")
            return builders[name]()
        except Exception as e:
            qjf_log.error(f"GenFunEngine series error: {e}")
            raise e


__all__ = [
    "A_CONSTRUCTIONS",
    "X_CONSTRUCTIONS",
    "GenSeries",
    "GenFunEngine",
    "a_from_quantum_product",
    "a_from_divisor_sum",
    "a_from_indefinite_theta",
    "a_from_sheaf_count",
    "k_from_theta",
    "x_times_k",
    "at_t_equal_u",
]
