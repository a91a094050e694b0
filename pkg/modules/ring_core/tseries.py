from fractions import Fraction
from typing import Dict, Optional

from modules.ring_core.errors import NonDivisible, OutOfRange
from modules.ring_core.scaled_laurent import Scalar
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent


class TSeries:
    """Laurent series in t over ULaurent, bounded below and known through
    t^t_order.

    The known part is a TLaurent; coefficients above t_order are unknown
    and are dropped on construction.
    """

    __slots__ = ("known", "t_order")

    def __init__(self, known: TLaurent, t_order: int) -> None:
        if known and known.max_t > t_order:
            known = known.truncate_t(t_order)
        self.known = known
        self.t_order = t_order

    @classmethod
    def from_tlaurent(cls, p, t_order: int) -> "TSeries":
        if isinstance(p, TSeries):
            return cls(p.known, min(p.t_order, t_order))
        if not isinstance(p, TLaurent):
            p = TLaurent.zero() + p
        return cls(p, t_order)

    @classmethod
    def zero(cls, t_order: int) -> "TSeries":
        return cls(TLaurent.zero(), t_order)

    @classmethod
    def one(cls, t_order: int) -> "TSeries":
        return cls(TLaurent.one(), t_order)

    # -- inspection -----------------------------------------------------

    @property
    def lead(self) -> int:
        """Lowest t-exponent of the known part; t_order + 1 for zero."""
        return self.known.min_t if self.known else self.t_order + 1

    def __bool__(self) -> bool:
        return bool(self.known)

    def is_zero(self) -> bool:
        return not self.known

    def coefficient(self, t_exp: int) -> ULaurent:
        if t_exp > self.t_order:
            raise OutOfRange(
                f"t^{t_exp} requested beyond t-order {self.t_order}"
            )
        return self.known.coefficient(t_exp)

    def is_unit(self) -> bool:
        return bool(self.known) and self.known.coefficient(
            self.lead
        ).is_unit()

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> Optional["TSeries"]:
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (TLaurent, ULaurent, int, Fraction)):
            return TSeries(TLaurent.zero() + other, self.t_order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TSeries(
            self.known + other.known, min(self.t_order, other.t_order)
        )

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries(-self.known, self.t_order)

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
            return TSeries(self.known.scale(other), self.t_order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t_order = min(
            self.t_order + other.lead, other.t_order + self.lead
        )
        return TSeries(
            self.known._mul_truncated(other.known, t_order), t_order
        )

    __rmul__ = __mul__

    def scale(self, value: Scalar) -> "TSeries":
        return TSeries(self.known.scale(value), self.t_order)

    def shifted(self, t_exp: int = 0, u_exp: int = 0) -> "TSeries":
        return TSeries(self.known.shifted(t_exp, u_exp), self.t_order + t_exp)

    def inverse(self) -> "TSeries":
        """1/f for f = m*(1 + h) with m a unit monomial and h = O(t).

        Known through t_order - 2*lead.
        """
        if not self.is_unit():
            raise NonDivisible(f"{self} has no unit lowest t-coefficient")
        lead = self.lead
        m = self.known.coefficient(lead)
        m_inv = m.unit_inverse()
        depth = self.t_order - lead
        h = [
            self.known.coefficient(lead + k) * m_inv
            for k in range(depth + 1)
        ]
        g = [ULaurent.one()]
        for n in range(1, depth + 1):
            acc = ULaurent.zero()
            for k in range(1, n + 1):
                if h[k]:
                    acc = acc + h[k] * g[n - k]
            g.append(-acc)
        body = TLaurent.from_t_coefficients(
            {n - lead: c * m_inv for n, c in enumerate(g) if c}
        )
        return TSeries(body, self.t_order - 2 * lead)

    def __pow__(self, n: int) -> "TSeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return TSeries.one(self.t_order - self.lead)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, t_order: int) -> "TSeries":
        return TSeries(self.known, min(t_order, self.t_order))

    def agrees_with(self, other, t_order: Optional[int] = None) -> bool:
        other = self._coerce(other)
        bound = min(self.t_order, other.t_order)
        if t_order is not None:
            bound = min(bound, t_order)
        return self.known.truncate_t(bound) == other.known.truncate_t(bound)

    def specialize_u(self, u_value: Scalar) -> "TSeries":
        return TSeries(self.known.specialize_u(u_value), self.t_order)

    def t_coefficients(self) -> Dict[int, ULaurent]:
        return self.known.t_coefficients()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"TSeries({self.known} + O(t^{self.t_order + 1}))"


def inverse_x(t_order: int) -> TSeries:
    """Expansion of 1/x = t/((1 - t*u)(1 - t/u)) through t^t_order."""
    return TSeries.from_tlaurent(TLaurent.x(), t_order - 2).inverse()


__all__ = ["TSeries", "inverse_x"]
