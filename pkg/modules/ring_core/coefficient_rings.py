"""Coefficient rings for q-series.

A ring object knows how to build its zero and one, how to bring foreign
values in, and which elements can be inverted. QSeries never inspects
coefficient types directly; it asks its ring.
"""

from fractions import Fraction
from typing import Any

from modules.ring_core.errors import NonDivisible
from modules.ring_core.scaled_laurent import simplify_rational
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent


class CoefficientRing:
    name: str = "ring"
    rank: int = 0

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def is_unit(self, value: Any) -> bool:
        return value.is_unit()

    def unit_inverse(self, value: Any) -> Any:
        if not self.is_unit(value):
            raise NonDivisible(f"{value} is not a unit in {self.name}")
        return value.unit_inverse()

    def exact_quotient(self, a: Any, b: Any) -> Any:
        if self.is_unit(b):
            return a * self.unit_inverse(b)
        return a.exact_divide(b)

    def __repr__(self) -> str:
        return f"<{self.name}>"


class RationalRing(CoefficientRing):
    name = "QQ"
    rank = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return simplify_rational(value)
        if isinstance(value, ULaurent) and value.is_constant():
            return value.constant_term()
        raise TypeError(f"{value!r} is not rational")

    def is_unit(self, value) -> bool:
        return value != 0

    def unit_inverse(self, value):
        if value == 0:
            raise ZeroDivisionError("inverse of 0")
        return simplify_rational(1 / Fraction(value))

    def exact_quotient(self, a, b):
        return simplify_rational(Fraction(a) / b)


class ULaurentRing(CoefficientRing):
    name = "QQ[u, 1/u]"
    rank = 1

    def zero(self):
        return ULaurent.zero()

    def one(self):
        return ULaurent.one()

    def coerce(self, value):
        if isinstance(value, ULaurent):
            return value
        if isinstance(value, (int, Fraction)):
            return ULaurent.constant(value)
        if isinstance(value, TLaurent):
            return value.to_ulaurent()
        if isinstance(value, UFraction):
            return value.to_ulaurent()
        raise TypeError(f"{value!r} does not coerce into {self.name}")


class UFractionRing(CoefficientRing):
    name = "QQ(u)"
    rank = 2

    def zero(self):
        return UFraction.zero()

    def one(self):
        return UFraction.one()

    def coerce(self, value):
        if isinstance(value, UFraction):
            return value
        if isinstance(value, (ULaurent, int, Fraction)):
            return UFraction(value)
        raise TypeError(f"{value!r} does not coerce into {self.name}")

    def is_unit(self, value) -> bool:
        return bool(value)

    def unit_inverse(self, value):
        return value.inverse()

    def exact_quotient(self, a, b):
        return a / b


class TLaurentRing(CoefficientRing):
    name = "QQ[u, 1/u][t, 1/t]"
    rank = 2

    def zero(self):
        return TLaurent.zero()

    def one(self):
        return TLaurent.one()

    def coerce(self, value):
        if isinstance(value, TLaurent):
            return value
        if isinstance(value, (ULaurent, int, Fraction)):
            return TLaurent.zero() + value
        if isinstance(value, UFraction):
            return TLaurent.from_ulaurent(value.to_ulaurent())
        raise TypeError(f"{value!r} does not coerce into {self.name}")


class TSeriesRing(CoefficientRing):
    """Laurent series in t known through t^t_order."""

    rank = 3

    def __init__(self, t_order: int) -> None:
        self.t_order = t_order
        self.name = f"QQ[u, 1/u]((t)) + O(t^{t_order + 1})"

    def zero(self):
        return TSeries.zero(self.t_order)

    def one(self):
        return TSeries.one(self.t_order)

    def coerce(self, value):
        if isinstance(value, TSeries):
            return value
        if isinstance(value, UFraction):
            value = value.to_ulaurent()
        return TSeries.from_tlaurent(value, self.t_order)

    def unit_inverse(self, value):
        return value.inverse()

    def exact_quotient(self, a, b):
        return a * b.inverse()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TSeriesRing) and other.t_order == self.t_order
        )

    def __hash__(self) -> int:
        return hash(("TSeriesRing", self.t_order))


RATIONALS = RationalRing()
ULAURENTS = ULaurentRing()
UFRACTIONS = UFractionRing()
TLAURENTS = TLaurentRing()


def ring_of(value: Any) -> CoefficientRing:
    if isinstance(value, (int, Fraction)):
        return RATIONALS
    if isinstance(value, ULaurent):
        return ULAURENTS
    if isinstance(value, UFraction):
        return UFRACTIONS
    if isinstance(value, TLaurent):
        return TLAURENTS
    if isinstance(value, TSeries):
        return TSeriesRing(value.t_order)
    raise TypeError(f"no coefficient ring for {type(value).__name__}")


def join(a: CoefficientRing, b: CoefficientRing) -> CoefficientRing:
    """Smallest listed ring containing both a and b."""
    if a is b:
        return a
    if isinstance(a, TSeriesRing) and isinstance(b, TSeriesRing):
        return a if a.t_order <= b.t_order else b
    if {a.rank, b.rank} == {2} and a != b:
        raise TypeError(f"no common ring for {a} and {b}")
    return a if a.rank >= b.rank else b


__all__ = [
    "CoefficientRing",
    "RATIONALS",
    "ULAURENTS",
    "UFRACTIONS",
    "TLAURENTS",
    "TSeriesRing",
    "ring_of",
    "join",
]
