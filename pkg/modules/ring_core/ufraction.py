from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from sympy import Poly, Symbol, ZZ

from modules.ring_core.errors import DenominatorNotCleared
from modules.ring_core.scaled_laurent import Scalar, as_rational
from modules.ring_core.ulaurent import ULaurent

_U = Symbol("u")


def _to_poly(p: ULaurent) -> Tuple[Poly, int]:
    """Split p = u^shift * P(u) with P an integer polynomial, P(0) != 0."""
    shift = p.min_exponent
    poly = Poly.from_dict(
        {(e - shift,): c for e, c in p._terms.items()}, _U, domain=ZZ
    )
    return poly, shift


def _from_poly(poly: Poly) -> ULaurent:
    return ULaurent._from_scaled(
        {e: int(c) for (e,), c in poly.as_dict().items()}, 1
    )


@lru_cache(maxsize=4096)
def _gcd(a: ULaurent, b: ULaurent) -> ULaurent:
    pa, _ = _to_poly(a)
    pb, _ = _to_poly(b)
    return _from_poly(pa.gcd(pb))


class UFraction:
    """Element num/den of the fraction field of the u-Laurent ring.

    Canonical form: num and den coprime, den with minimal u-exponent 0
    and leading coefficient 1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, reduced: bool = False) -> None:
        num = _as_ulaurent(num)
        den = _as_ulaurent(den)
        if not den:
            raise ZeroDivisionError("UFraction with zero denominator")
        if not reduced:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def zero(cls) -> "UFraction":
        return cls(ULaurent.zero(), ULaurent.one(), reduced=True)

    @classmethod
    def one(cls) -> "UFraction":
        return cls(ULaurent.one(), ULaurent.one(), reduced=True)

    @classmethod
    def constant(cls, value: Scalar) -> "UFraction":
        return cls(ULaurent.constant(value), ULaurent.one(), reduced=True)

    # -- inspection -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_unit(self) -> bool:
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def to_ulaurent(self) -> ULaurent:
        if not self.den.is_monomial():
            raise DenominatorNotCleared(
                f"({self.num})/({self.den}) is not a Laurent polynomial"
            )
        return self.num * self.den.unit_inverse()

    # -- field operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UFraction):
            return other
        if isinstance(other, (ULaurent, int, Fraction)):
            return UFraction(_as_ulaurent(other), ULaurent.one(), reduced=True)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return UFraction(self.num + other.num, self.den)
        return UFraction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self) -> "UFraction":
        return UFraction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return UFraction.zero()
            return UFraction(self.num.scale(other), self.den, reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return UFraction.zero()
        return UFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "UFraction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero UFraction")
        return UFraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "UFraction":
        if n < 0:
            return self.inverse() ** (-n)
        return UFraction(self.num**n, self.den**n, reduced=True)

    def scale(self, value: Scalar) -> "UFraction":
        return self * as_rational(value)

    def evaluate(self, u_value: Scalar) -> Scalar:
        den = self.den.evaluate(u_value)
        if den == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes")
        return Fraction(self.num.evaluate(u_value)) / den

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("UFraction", self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"UFraction({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_ulaurent(value) -> ULaurent:
    if isinstance(value, ULaurent):
        return value
    if isinstance(value, (int, Fraction)):
        return ULaurent.constant(value)
    raise TypeError(f"cannot build a UFraction from {type(value).__name__}")


def _canonical(num: ULaurent, den: ULaurent) -> Tuple[ULaurent, ULaurent]:
    if not num:
        return ULaurent.zero(), ULaurent.one()
    if den.is_monomial():
        return num * den.unit_inverse(), ULaurent.one()
    if not num.is_monomial():
        g = _gcd(num, den)
        if not g.is_constant():
            num = num.exact_divide(g)
            den = den.exact_divide(g)
    unit = ULaurent.monomial(den.min_exponent, den.leading_coefficient())
    return num * unit.unit_inverse(), den * unit.unit_inverse()


__all__ = ["UFraction"]
