from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from modules.ring_core.errors import NonDivisible, NotSymmetric
from modules.ring_core.scaled_laurent import (
    Scalar,
    ScaledLaurent,
    as_rational,
)
from modules.ring_core.ulaurent import ULaurent

Key = Tuple[int, int]


class TLaurent(ScaledLaurent):
    """Laurent polynomial in t over ULaurent, stored flat on (t, u) keys."""

    __slots__ = ()

    @staticmethod
    def _unit_key() -> Key:
        return (0, 0)

    def _coerce(self, other):
        if isinstance(other, TLaurent):
            return other
        if isinstance(other, ULaurent):
            return TLaurent.from_ulaurent(other)
        if isinstance(other, (int, Fraction)):
            return TLaurent.constant(other)
        return None

    @classmethod
    def monomial(
        cls, t_exp: int, u_exp: int = 0, coefficient: Scalar = 1
    ) -> "TLaurent":
        value = as_rational(coefficient)
        return cls._from_scaled(
            {(t_exp, u_exp): value.numerator}, value.denominator
        )

    @classmethod
    def t(cls) -> "TLaurent":
        return cls.monomial(1, 0)

    @classmethod
    def from_ulaurent(cls, p: ULaurent, t_exp: int = 0) -> "TLaurent":
        return cls._from_scaled(
            {(t_exp, e): c for e, c in p._terms.items()}, p._den
        )

    @classmethod
    def from_t_coefficients(cls, coefficients: Dict[int, ULaurent]):
        total = cls.zero()
        for t_exp, p in coefficients.items():
            total = total + cls.from_ulaurent(p, t_exp)
        return total

    @classmethod
    def x(cls) -> "TLaurent":
        """x = t + 1/t - u - 1/u."""
        return cls._from_scaled(
            {(1, 0): 1, (-1, 0): 1, (0, 1): -1, (0, -1): -1}, 1
        )

    # -- inspection -----------------------------------------------------

    def t_exponents(self) -> List[int]:
        return sorted({t for t, _ in self._terms})

    @property
    def min_t(self) -> Optional[int]:
        return min(t for t, _ in self._terms) if self._terms else None

    @property
    def max_t(self) -> Optional[int]:
        return max(t for t, _ in self._terms) if self._terms else None

    def coefficient(self, t_exp: int) -> ULaurent:
        return ULaurent._from_scaled(
            {u: c for (t, u), c in self._terms.items() if t == t_exp},
            self._den,
        )

    def t_coefficients(self) -> Dict[int, ULaurent]:
        grouped: Dict[int, Dict[int, int]] = {}
        for (t, u), c in self._terms.items():
            grouped.setdefault(t, {})[u] = c
        return {
            t: ULaurent._from_scaled(terms, self._den)
            for t, terms in sorted(grouped.items())
        }

    def is_t_free(self) -> bool:
        return all(t == 0 for t, _ in self._terms)

    def to_ulaurent(self) -> ULaurent:
        if not self.is_t_free():
            raise ValueError(f"{self} depends on t")
        return self.coefficient(0)

    # -- ring operations ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, TLaurent):
            return self._mul_truncated(other, None)
        if isinstance(other, ULaurent):
            return self._mul_truncated(TLaurent.from_ulaurent(other), None)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def _mul_truncated(
        self, other: "TLaurent", t_max: Optional[int]
    ) -> "TLaurent":
        a, b = self._terms, other._terms
        if not a or not b:
            return TLaurent.zero()
        if t_max is None:
            if len(b) == 1 and (0, 0) in b and other._den == b[(0, 0)]:
                return self
            if len(a) == 1 and (0, 0) in a and self._den == a[(0, 0)]:
                return other
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Key, int] = {}
        get = out.get
        for (tb, ub), cb in b.items():
            for (ta, ua), ca in a.items():
                t = ta + tb
                if t_max is not None and t > t_max:
                    continue
                key = (t, ua + ub)
                out[key] = get(key, 0) + ca * cb
        return TLaurent._from_scaled(out, self._den * other._den)

    def __pow__(self, n: int) -> "TLaurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = TLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shifted(self, t_exp: int = 0, u_exp: int = 0) -> "TLaurent":
        """Multiply by the monomial t^t_exp u^u_exp."""
        if not t_exp and not u_exp:
            return self
        return TLaurent._from_scaled(
            {(t + t_exp, u + u_exp): c for (t, u), c in self._terms.items()},
            self._den,
        )

    def unit_inverse(self) -> "TLaurent":
        if not self.is_unit():
            raise NonDivisible(f"{self} is not a unit")
        ((t, u), c), = self._terms.items()
        return TLaurent.monomial(-t, -u, Fraction(self._den, c))

    def truncate_t(self, t_max: int) -> "TLaurent":
        return TLaurent._from_scaled(
            {k: c for k, c in self._terms.items() if k[0] <= t_max},
            self._den,
        )

    def exact_divide(self, other) -> "TLaurent":
        """Quotient c with c * other == self.

        Long division on the highest t-power; each step divides leading
        t-coefficients exactly in ULaurent.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("exact_divide by zero")
        if not self:
            return TLaurent.zero()
        if other.is_unit():
            return self * other.unit_inverse()
        if other.is_t_free():
            divisor = other.coefficient(0)
            return TLaurent.from_t_coefficients(
                {
                    t: p.exact_divide(divisor)
                    for t, p in self.t_coefficients().items()
                }
            )
        top_b = other.max_t
        lead_b = other.coefficient(top_b)
        low_q = self.min_t - other.min_t
        remainder = self
        quotient = TLaurent.zero()
        while remainder:
            top_r = remainder.max_t
            e = top_r - top_b
            if e < low_q:
                raise NonDivisible(f"{self} is not divisible by {other}")
            c = remainder.coefficient(top_r).exact_divide(lead_b)
            step = TLaurent.from_ulaurent(c, e)
            quotient = quotient + step
            remainder = remainder - step * other
        return quotient

    # -- specializations --------------------------------------------------

    def reflect_t(self) -> "TLaurent":
        """t -> 1/t."""
        return TLaurent._from_scaled(
            {(-t, u): c for (t, u), c in self._terms.items()}, self._den
        )

    def is_t_symmetric(self) -> bool:
        return self == self.reflect_t()

    def specialize_t_to_u(self) -> ULaurent:
        """t -> u (the value t = y^(1/2))."""
        out: Dict[int, int] = {}
        for (t, u), c in self._terms.items():
            out[t + u] = out.get(t + u, 0) + c
        return ULaurent._from_scaled(out, self._den)

    def specialize_u(self, u_value: Scalar) -> "TLaurent":
        """Evaluate u at a rational; the result is t-only."""
        u_value = as_rational(u_value)
        out: Dict[Key, Fraction] = {}
        for (t, u), c in self._terms.items():
            weight = 1 if u_value == 1 else u_value**u
            out[(t, 0)] = out.get((t, 0), 0) + c * weight
        return TLaurent({k: Fraction(v) / self._den for k, v in out.items()})

    def argument_derivative(self, alpha: int, beta: int) -> "TLaurent":
        """Y d/dY for Y = t^alpha u^beta, acting on polynomials in Y."""
        norm = alpha * alpha + beta * beta
        return TLaurent._from_scaled(
            {
                (t, u): c * (t * alpha + u * beta)
                for (t, u), c in self._terms.items()
            },
            self._den * norm,
        )

    def __repr__(self) -> str:
        return f"TLaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t_exp, p in sorted(self.t_coefficients().items(), reverse=True):
            mono = "" if t_exp == 0 else "t" if t_exp == 1 else f"t^{t_exp}"
            body = str(p)
            if not mono:
                parts.append(body)
            elif p == 1:
                parts.append(mono)
            else:
                parts.append(f"({body})*{mono}")
        return " + ".join(parts)


def symmetric_check(p: TLaurent) -> None:
    if not p.is_t_symmetric():
        raise NotSymmetric(f"{p} is not invariant under t -> 1/t")


__all__ = ["TLaurent", "symmetric_check"]
