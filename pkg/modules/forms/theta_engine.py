from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence

from modules.forms.euler_products import eta_power, euler_product, theta_pair
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import (
    TLAURENTS,
    ULAURENTS,
    TSeriesRing,
)
from modules.ring_core.errors import NonDivisible, PrefactorImbalance
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log


class ThetaArgument(Enum):
    """Elliptic argument m = t^a u^b of a theta function."""

    Y = (0, 2)
    Y1 = (1, 1)
    Y2 = (-1, 1)
    T_FORMAL = (1, 0)

    @property
    def t_exp(self) -> int:
        return self.value[0]

    @property
    def u_exp(self) -> int:
        return self.value[1]

    @property
    def ring(self):
        return TLAURENTS if self.t_exp else ULAURENTS

    def power(self, k: int, coefficient=1):
        """m^k in the ring of the argument."""
        if self.t_exp:
            return TLaurent.monomial(
                k * self.t_exp, k * self.u_exp, coefficient
            )
        return ULaurent.monomial(k * self.u_exp, coefficient)


def _prefactor(half_t: int, half_u: int):
    if half_t % 2 or half_u % 2:
        raise PrefactorImbalance(
            f"t^({half_t}/2) u^({half_u}/2) is not a Laurent monomial"
        )
    if half_t:
        return TLaurent.monomial(half_t // 2, half_u // 2)
    return ULaurent.monomial(half_u // 2)


@dataclass(frozen=True)
class ThetaFactored:
    """q^(eighth_power/8) t^(half_t_power/2) u^(half_u_power/2) * body.

    Plain thetas also keep body = root * product, with root a Laurent
    polynomial and product an Euler product with constant term 1.
    """

    eighth_power: int
    half_u_power: int
    half_t_power: int
    body: QSeries
    argument: Optional[ThetaArgument] = None
    root: Any = None
    product: Optional[QSeries] = None

    @property
    def order(self) -> int:
        return self.body.order

    def is_plain(self) -> bool:
        return self.product is not None

    def __mul__(self, other: "ThetaFactored") -> "ThetaFactored":
        plain = self.is_plain() and other.is_plain()
        return ThetaFactored(
            self.eighth_power + other.eighth_power,
            self.half_u_power + other.half_u_power,
            self.half_t_power + other.half_t_power,
            self.body * other.body,
            self.argument if self.argument == other.argument else None,
            self.root * other.root if plain else None,
            self.product * other.product if plain else None,
        )

    def __pow__(self, n: int) -> "ThetaFactored":
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def hat(self) -> QSeries:
        """The represented series with q^(a/8) dropped; the t and u
        prefactors must be integral."""
        if not self.half_u_power and not self.half_t_power:
            return self.body
        return self.body * _prefactor(self.half_t_power, self.half_u_power)

    def prime(self) -> "ThetaFactored":
        """' = m d/dm for the theta argument m, prefactor included."""
        if self.argument is None:
            raise ValueError("derivative needs a theta argument")
        argument = self.argument

        def derive(c):
            if isinstance(c, TLaurent):
                return c.argument_derivative(argument.t_exp, argument.u_exp)
            if argument is not ThetaArgument.Y:
                raise ValueError(f"{argument} needs TLaurent coefficients")
            return c.y_derivative()

        # m^(-1/2) contributes -1/2
        body = self.body.map_coefficients(derive) - self.body * Fraction(1, 2)
        return replace(self, body=body, root=None, product=None)

    def derivative(self, k: int) -> "ThetaFactored":
        result = self
        for _ in range(k):
            result = result.prime()
        return result

    def apply_D(self) -> "ThetaFactored":
        """q d/dq of the represented object: body -> (D + a/8) body."""
        shifted = self.body.D() + self.body * Fraction(self.eighth_power, 8)
        return replace(self, body=shifted, root=None, product=None)

    def log_derivative(self) -> QSeries:
        """D log of the represented object (the root is q-free)."""
        if not self.is_plain():
            raise ValueError("log derivative needs a plain theta product")
        return self.product.log_derivative() + Fraction(self.eighth_power, 8)


@lru_cache(maxsize=64)
def theta_product(argument: ThetaArgument, order: int) -> ThetaFactored:
    """theta(m) = q^(1/8) m^(-1/2) (m - 1) prod (1-q^n)(1-q^n m)(1-q^n/m)."""
    shift = argument.value
    product = euler_product([(None, 1)] + theta_pair(shift), order)
    root = argument.power(1) - 1
    return ThetaFactored(
        1,
        -argument.u_exp,
        -argument.t_exp,
        product * root,
        argument,
        root,
        product,
    )


@lru_cache(maxsize=64)
def theta_sum(argument: ThetaArgument, order: int) -> ThetaFactored:
    """The same theta from sum (-1)^n q^((n^2+n)/2) m^(n+1)."""
    terms = {}
    n = 0
    while n * (n + 1) // 2 <= order:
        for k in (n, -n - 1):
            e = k * (k + 1) // 2
            sign = -1 if k % 2 else 1
            terms[e] = terms.get(e, 0) + argument.power(k + 1, sign)
        n += 1
    body = QSeries(argument.ring, terms, order)
    return ThetaFactored(1, -argument.u_exp, -argument.t_exp, body, argument)


@lru_cache(maxsize=16)
def theta_prime_0(order: int) -> ThetaFactored:
    """theta'(0) = q^(1/8) prod (1 - q^n)^3."""
    product = eta_power(3, order)
    return ThetaFactored(1, 0, 0, product, None, 1, product)


@lru_cache(maxsize=16)
def discriminant_factored(order: int) -> ThetaFactored:
    """Delta = q prod (1 - q^n)^24, as a factored form with q^(8/8)."""
    product = eta_power(24, order)
    return ThetaFactored(8, 0, 0, product, None, 1, product)


def _is_t_free(value) -> bool:
    return not isinstance(value, TLaurent) or value.is_t_free()


def theta_quotient(
    numerators: Sequence[ThetaFactored],
    denominators: Sequence[ThetaFactored],
    scalar=1,
    scalar_den=1,
    t_order: Optional[int] = None,
) -> QSeries:
    """scalar * prod(numerators) / (scalar_den * prod(denominators)).

    Fractional q, t and u prefactors must cancel. Roots are divided
    exactly where possible; t-dependent denominator roots that do not
    divide are expanded as t-series through t^t_order.
    """
    factors = list(numerators) + list(denominators)
    if not all(f.is_plain() for f in factors):
        raise ValueError("theta quotients need plain theta products")
    eighth = sum(f.eighth_power for f in numerators) - sum(
        f.eighth_power for f in denominators
    )
    half_u = sum(f.half_u_power for f in numerators) - sum(
        f.half_u_power for f in denominators
    )
    half_t = sum(f.half_t_power for f in numerators) - sum(
        f.half_t_power for f in denominators
    )
    if eighth % 8:
        raise PrefactorImbalance(f"q^({eighth}/8) does not cancel")
    root = TLaurent.zero() + _prefactor(half_t, half_u) * scalar
    for f in numerators:
        root = root * f.root
    t_free_den = TLaurent.zero() + scalar_den
    t_den = TLaurent.one()
    for f in denominators:
        if _is_t_free(f.root):
            t_free_den = t_free_den * f.root
        else:
            t_den = t_den * f.root
    root = root.exact_divide(t_free_den)

    product = numerators[0].product if numerators else None
    for f in numerators[1:]:
        product = product * f.product
    order = min(f.order for f in factors)
    if product is None:
        product = QSeries.one(ULAURENTS, order)
    if denominators:
        den_product = denominators[0].product
        for f in denominators[1:]:
            den_product = den_product * f.product
        product = product.exact_divide(den_product)

    try:
        root = root.exact_divide(t_den)
    except NonDivisible:
        if t_order is None:
            raise
        budget = t_order + order + 2
        inverse = TSeries.from_tlaurent(t_den, budget).inverse()
        series = (product * (inverse * root)).map_coefficients(
            lambda c: c.truncate(t_order), TSeriesRing(t_order)
        )
        return series.shift(eighth // 8)
    if root.is_t_free() and product.ring is not TLAURENTS:
        root = root.to_ulaurent()
    return (product * root).shift(eighth // 8)


class ThetaEngine:
    """Theta functions and their derivatives through a fixed q-order."""

    def __init__(self, order: int) -> None:
        try:
            self.order = order
        except Exception as e:
            qjf_log.error(f"ThetaEngine __init__ error: {e}")
            raise e

    def __enter__(self) -> "ThetaEngine":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def theta(self, argument: ThetaArgument) -> ThetaFactored:
        try:
            return theta_product(argument, self.order)
        except Exception as e:
            qjf_log.error(f"ThetaEngine theta error: {e}")
            raise e

    def theta_from_sum(self, argument: ThetaArgument) -> ThetaFactored:
        try:
            return theta_sum(argument, self.order)
        except Exception as e:
            qjf_log.error(f"ThetaEngine theta_from_sum error: {e}")
            raise e

    def theta_hat(self, argument: ThetaArgument = ThetaArgument.Y):
        """theta / q^(1/8) as a q-series."""
        return self.theta(argument).hat()

    def theta_deriv(
        self, k: int, argument: ThetaArgument = ThetaArgument.Y
    ) -> ThetaFactored:
        try:
            return self.theta(argument).derivative(k)
        except Exception as e:
            qjf_log.error(f"ThetaEngine theta_deriv error: {e}")
            raise e

    def theta_prime_0(self) -> QSeries:
        """theta'(0) / q^(1/8) = prod (1 - q^n)^3."""
        return theta_prime_0(self.order).hat()

    def heat_residual(self, factor=2) -> QSeries:
        """theta-hat'' - factor * (D + 1/8) theta-hat for the argument y.

        Zero for factor 2: the y d/dy square of y^(n+1/2) is twice the
        q d/dq weight of q^((n+1/2)^2/2).
        """
        try:
            theta = self.theta(ThetaArgument.Y)
            second = theta.derivative(2).hat()
            return second - theta.apply_D().hat() * factor
        except Exception as e:
            qjf_log.error(f"ThetaEngine heat_residual error: {e}")
            raise e

    def quotient(
        self,
        numerators: Sequence[ThetaFactored],
        denominators: Sequence[ThetaFactored],
        scalar=1,
        scalar_den=1,
        t_order: Optional[int] = None,
    ) -> QSeries:
        try:
            qjf_log.debug(
                f"theta quotient {len(numerators)}/{len(denominators)} "
                f"at order {self.order}"
            )
            return theta_quotient(
                numerators, denominators, scalar, scalar_den, t_order
            )
        except Exception as e:
            qjf_log.error(f"ThetaEngine quotient error: {e}")
            raise e


__all__ = [
    "ThetaArgument",
    "ThetaFactored",
    "ThetaEngine",
    "theta_product",
    "theta_sum",
    "theta_prime_0",
    "discriminant_factored",
    "theta_quotient",
]
