from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

from sympy import binomial

from modules.qseries.qseries import XSeries
from modules.ring_core.coefficient_rings import UFRACTIONS
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent


@lru_cache(maxsize=64)
def s_poly(n: int) -> ULaurent:
    """s_n(y) = sum_k C(n, k)^2 y^(k - n/2)."""
    return ULaurent(
        {2 * k - n: int(binomial(n, k)) ** 2 for k in range(n + 1)}
    )


@lru_cache(maxsize=16)
def S_series(x_order: int) -> XSeries:
    """S(y, x) = sum_n (-1)^n s_n / (u - 1/u)^(2n+1) x^(n+1) / (n+1)."""
    delta = UFraction(ULaurent.u_minus_u_inverse())
    terms = {}
    for n in range(x_order):
        terms[n + 1] = (
            UFraction(s_poly(n)) * Fraction((-1) ** n, n + 1)
        ) / delta ** (2 * n + 1)
    return XSeries(UFRACTIONS, terms, x_order)


class ZPolynomial:
    """Polynomial in z with UFraction coefficients; coefficients[j]
    multiplies z^j."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: List[UFraction]) -> None:
        coefficients = [UFRACTIONS.coerce(c) for c in coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self.coefficients = coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> UFraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return UFraction.zero()

    def evaluate(self, z: int) -> UFraction:
        total = UFraction.zero()
        for c in reversed(self.coefficients):
            total = total * z + c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None

    def __repr__(self) -> str:
        terms = [
            f"({c})*z^{j}" for j, c in enumerate(self.coefficients) if c
        ]
        return "ZPolynomial(" + (" + ".join(terms) or "0") + ")"


@lru_cache(maxsize=64)
def P_poly(n: int) -> ZPolynomial:
    """P_n(y, z) = (u - 1/u)^n Coeff_{x^n} exp(S z)."""
    if n == 0:
        return ZPolynomial([UFraction.one()])
    S = S_series(n)
    scale = UFraction(ULaurent.u_minus_u_inverse()) ** n
    coefficients = [UFraction.zero()]
    power = S
    for j in range(1, n + 1):
        c = power.coeff(n) * Fraction(1, factorial(j))
        coefficients.append(c * scale)
        power = power * S
    return ZPolynomial(coefficients)


@dataclass(frozen=True)
class SPolynomials:
    s: List[ULaurent]
    S: XSeries
    P: List[ZPolynomial]


def s_polynomials(nmax: int) -> SPolynomials:
    return SPolynomials(
        [s_poly(n) for n in range(nmax + 1)],
        S_series(nmax + 1),
        [P_poly(n) for n in range(nmax + 1)],
    )


__all__ = [
    "ZPolynomial",
    "SPolynomials",
    "s_poly",
    "S_series",
    "P_poly",
    "s_polynomials",
]
