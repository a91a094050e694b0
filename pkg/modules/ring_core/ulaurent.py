from fractions import Fraction
from typing import Dict, Optional

from modules.ring_core.errors import NonDivisible, NonMonomialTarget
from modules.ring_core.scaled_laurent import (
    Scalar,
    ScaledLaurent,
    as_rational,
    simplify_rational,
)


class ULaurent(ScaledLaurent):
    """Laurent polynomial in u = y^(1/2) with rational coefficients.

    Keys are integer u-exponents, so y^(e/2) is stored at key e.
    """

    __slots__ = ()

    @staticmethod
    def _unit_key() -> int:
        return 0

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "ULaurent":
        value = as_rational(coefficient)
        return cls._from_scaled(
            {exponent: value.numerator}, value.denominator
        )

    @classmethod
    def u(cls) -> "ULaurent":
        return cls.monomial(1)

    @classmethod
    def y(cls) -> "ULaurent":
        return cls.monomial(2)

    @classmethod
    def quantum_integer(cls, n: int) -> "ULaurent":
        """[n]_y = u^(n-1) + u^(n-3) + ... + u^(1-n); [-n]_y = -[n]_y."""
        if n == 0:
            return cls.zero()
        sign = 1 if n > 0 else -1
        n = abs(n)
        return cls._from_scaled(
            {n - 1 - 2 * i: sign for i in range(n)}, 1
        )

    @classmethod
    def u_minus_u_inverse(cls) -> "ULaurent":
        return cls._from_scaled({1: 1, -1: -1}, 1)

    def coefficient(self, exponent: int) -> Scalar:
        return self.coefficient_at(exponent)

    @property
    def min_exponent(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def max_exponent(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def leading_coefficient(self) -> Fraction:
        return Fraction(self._terms[max(self._terms)], self._den)

    # -- ring operations ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, ULaurent):
            a, b = self._terms, other._terms
            if not a or not b:
                return ULaurent.zero()
            if len(b) == 1 and 0 in b and other._den == b[0]:
                return self
            if len(a) == 1 and 0 in a and self._den == a[0]:
                return other
            out: Dict[int, int] = {}
            get = out.get
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = ea + eb
                    out[e] = get(e, 0) + ca * cb
            return ULaurent._from_scaled(out, self._den * other._den)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ULaurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = ULaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shifted(self, t_exp: int = 0, u_exp: int = 0) -> "ULaurent":
        """Multiply by the monomial u^u_exp."""
        if t_exp:
            raise NonMonomialTarget("ULaurent cannot carry a t-power")
        if not u_exp:
            return self
        return ULaurent._from_scaled(
            {e + u_exp: c for e, c in self._terms.items()}, self._den
        )

    def unit_inverse(self) -> "ULaurent":
        if not self.is_unit():
            raise NonDivisible(f"{self} is not a unit")
        (e, c), = self._terms.items()
        value = Fraction(self._den, c)
        return ULaurent.monomial(-e, value)

    def exact_divide(self, other: "ULaurent") -> "ULaurent":
        """Quotient c with c * other == self, by long division on the
        highest u-exponents."""
        if not isinstance(other, ULaurent):
            other = ULaurent.constant(other)
        if not other:
            raise ZeroDivisionError("exact_divide by zero")
        if not self:
            return ULaurent.zero()
        if other.is_unit():
            return self * other.unit_inverse()
        top_b = other.max_exponent
        low_b = other.min_exponent
        lead_b = other.leading_coefficient()
        low_q = self.min_exponent - low_b
        remainder = self
        quotient: Dict[int, Fraction] = {}
        while remainder:
            top_r = remainder.max_exponent
            e = top_r - top_b
            if e < low_q:
                raise NonDivisible(f"{self} is not divisible by {other}")
            c = remainder.leading_coefficient() / lead_b
            quotient[e] = c
            remainder = remainder - other.shifted(0, e).scale(c)
        return ULaurent(quotient)

    def y_derivative(self) -> "ULaurent":
        """y d/dy = (u/2) d/du."""
        return ULaurent._from_scaled(
            {e: c * e for e, c in self._terms.items()}, self._den * 2
        )

    def reflect(self) -> "ULaurent":
        """u -> 1/u."""
        return ULaurent._from_scaled(
            {-e: c for e, c in self._terms.items()}, self._den
        )

    def is_palindromic(self) -> bool:
        return self == self.reflect()

    def evaluate(self, u_value: Scalar) -> Scalar:
        u_value = as_rational(u_value)
        if u_value == 1:
            return simplify_rational(
                Fraction(sum(self._terms.values()), self._den)
            )
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * u_value**e
        return simplify_rational(total / self._den)

    def as_y_polynomial(self) -> "ULaurent":
        """Reread u^(2k) as Y^k, i.e. halve every exponent."""
        if any(e % 2 for e in self._terms):
            raise NonMonomialTarget(
                f"{self} has odd u-exponents and is not a series in y"
            )
        return ULaurent._from_scaled(
            {e // 2: c for e, c in self._terms.items()}, self._den
        )

    def substitute(self, t_exp: int, u_exp: int):
        """u -> t^t_exp u^u_exp, returned as a TLaurent."""
        from modules.ring_core.tlaurent import TLaurent

        terms = {}
        for e, c in self._terms.items():
            key = (e * t_exp, e * u_exp)
            terms[key] = terms.get(key, 0) + c
        return TLaurent._from_scaled(terms, self._den)

    def __repr__(self) -> str:
        return f"ULaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self.items(), reverse=True):
            if e == 0:
                parts.append(f"{c}")
            else:
                mono = "u" if e == 1 else f"u^{e}"
                coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
                parts.append(f"{coeff}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def substitute_y(p: ULaurent, target) -> "TLaurent":  # noqa: F821
    """Send every u^e of p to target^e; target must be a unit monomial
    t^a u^b with coefficient 1 (e.g. t*u or u/t, or 1 for y = 1)."""
    from modules.ring_core.tlaurent import TLaurent

    if isinstance(target, ULaurent):
        target = TLaurent.from_ulaurent(target)
    if isinstance(target, (int, Fraction)):
        target = TLaurent.constant(target)
    if not target.is_monomial():
        raise NonMonomialTarget(f"{target} is not a monomial")
    ((t_exp, u_exp), c), = target.items()
    if c != 1:
        raise NonMonomialTarget(f"{target} has coefficient {c}")
    return p.substitute(t_exp, u_exp)


__all__ = ["ULaurent", "substitute_y"]
