from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from modules.ring_core.coefficient_rings import (
    CoefficientRing,
    RATIONALS,
    join,
    ring_of,
)
from modules.ring_core.errors import (
    BadValuation,
    NonUnitLeading,
    NonUnitLinear,
    NonzeroConstantTerm,
    OutOfRange,
)


class QSeries:
    """Truncated Laurent series sum c_m q^m over a coefficient ring.

    Coefficients are stored densely for exponents lead..order; exponents
    above order are unknown. A zero series has lead = order + 1.
    Products are known through min(order_a + lead_b, order_b + lead_a).
    """

    default_variable = "q"
    __slots__ = ("ring", "lead", "coeffs", "order", "variable")

    def __init__(
        self,
        ring: CoefficientRing,
        terms: Optional[Dict[int, Any]] = None,
        order: int = 0,
        variable: Optional[str] = None,
    ) -> None:
        kept = {}
        for m, c in (terms or {}).items():
            if m <= order:
                c = ring.coerce(c)
                if c:
                    kept[m] = c
        if kept:
            lead = min(kept)
            zero = ring.zero()
            coeffs = [kept.get(m, zero) for m in range(lead, order + 1)]
        else:
            lead, coeffs = order + 1, []
        self._assign(ring, lead, coeffs, order, variable)

    def _assign(self, ring, lead, coeffs, order, variable) -> None:
        self.ring = ring
        self.lead = lead
        self.coeffs = coeffs
        self.order = order
        self.variable = variable or self.default_variable

    def _build(
        self,
        ring: CoefficientRing,
        lead: int,
        coeffs: List[Any],
        order: int,
        variable: Optional[str] = None,
    ) -> "QSeries":
        """Wrap a dense list, dropping entries above order and leading
        zeros."""
        coeffs = coeffs[: max(order - lead + 1, 0)]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        if start == len(coeffs):
            lead, coeffs = order + 1, []
        elif start:
            lead, coeffs = lead + start, coeffs[start:]
        obj = object.__new__(type(self))
        obj._assign(ring, lead, coeffs, order, variable or self.variable)
        return obj

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int, variable=None):
        return cls(ring, {}, order, variable)

    @classmethod
    def constant(cls, ring: CoefficientRing, value, order: int, variable=None):
        return cls(ring, {0: value}, order, variable)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int, variable=None):
        return cls(ring, {0: ring.one()}, order, variable)

    @classmethod
    def gen(cls, ring: CoefficientRing, order: int, variable=None):
        """The series variable itself."""
        return cls(ring, {1: ring.one()}, order, variable)

    @classmethod
    def from_list(
        cls,
        ring: CoefficientRing,
        lead: int,
        values,
        order: int,
        variable=None,
    ):
        return cls(
            ring, {lead + i: c for i, c in enumerate(values)}, order, variable
        )

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        return self.lead

    def _c(self, m: int) -> Any:
        i = m - self.lead
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def coeff(self, m: int) -> Any:
        if m > self.order:
            raise OutOfRange(
                f"{self.variable}^{m} requested beyond order {self.order}"
            )
        return self._c(m)

    __getitem__ = coeff

    def res(self) -> Any:
        return self.coeff(-1)

    def items(self) -> Iterator[Tuple[int, Any]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lead + i, c

    def in_ring(self, ring: CoefficientRing) -> "QSeries":
        if ring is self.ring or ring == self.ring:
            return self
        return self._build(
            ring,
            self.lead,
            [ring.coerce(c) for c in self.coeffs],
            self.order,
        )

    def map_coefficients(
        self, fn: Callable[[Any], Any], ring: Optional[CoefficientRing] = None
    ) -> "QSeries":
        ring = ring or self.ring
        return self._build(
            ring,
            self.lead,
            [ring.coerce(fn(c)) for c in self.coeffs],
            self.order,
        )

    def truncate(self, order: int) -> "QSeries":
        order = min(order, self.order)
        return self._build(self.ring, self.lead, self.coeffs, order)

    def extend_order(self, order: int) -> "QSeries":
        """Declare the coefficients up to order known (missing ones zero)."""
        if order <= self.order:
            return self.truncate(order)
        if self.is_zero():
            return self._build(self.ring, order + 1, [], order)
        zero = self.ring.zero()
        padded = self.coeffs + [zero] * (order - self.order)
        return self._build(self.ring, self.lead, padded, order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k."""
        if self.is_zero():
            order = self.order + k
            return self._build(self.ring, order + 1, [], order)
        return self._build(
            self.ring, self.lead + k, list(self.coeffs), self.order + k
        )

    def first_difference(
        self, other: "QSeries", order: Optional[int] = None
    ) -> Optional[int]:
        """Lowest exponent where self and other differ, or None."""
        ring = join(self.ring, other.ring)
        a, b = self.in_ring(ring), other.in_ring(ring)
        bound = min(a.order, b.order)
        if order is not None:
            bound = min(bound, order)
        for m in range(min(a.lead, b.lead), bound + 1):
            if a._c(m) != b._c(m):
                return m
        return None

    def agrees_with(self, other: "QSeries", order: Optional[int] = None):
        return self.first_difference(other, order) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    # -- ring operations ------------------------------------------------

    def _as_series(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        ring = join(self.ring, ring_of(other))
        return type(self).constant(ring, other, self.order, self.variable)

    def __add__(self, other):
        other = self._as_series(other)
        ring = join(self.ring, other.ring)
        a, b = self.in_ring(ring), other.in_ring(ring)
        order = min(a.order, b.order)
        lead = min(a.lead, b.lead)
        coeffs = [a._c(m) + b._c(m) for m in range(lead, order + 1)]
        return self._build(ring, lead, coeffs, order)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return self._build(
            self.ring, self.lead, [-c for c in self.coeffs], self.order
        )

    def __sub__(self, other):
        return self + (-self._as_series(other))

    def __rsub__(self, other):
        return self._as_series(other) + (-self)

    def scale(self, value) -> "QSeries":
        ring = join(self.ring, ring_of(value))
        if ring is not self.ring:
            value = ring.coerce(value)
        return self._build(
            ring,
            self.lead,
            [ring.coerce(c) * value for c in self.coeffs],
            self.order,
        )

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        ring = join(self.ring, other.ring)
        a, b = self.in_ring(ring), other.in_ring(ring)
        order = min(a.order + b.lead, b.order + a.lead)
        lead = a.lead + b.lead
        if a.is_zero() or b.is_zero():
            return self._build(ring, order + 1, [], order)
        ca, cb = a.coeffs, b.coeffs
        na, nb = len(ca), len(cb)
        zero = ring.zero()
        out = []
        for k in range(order - lead + 1):
            acc = zero
            for i in range(max(0, k - nb + 1), min(k, na - 1) + 1):
                x, y = ca[i], cb[k - i]
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return self._build(ring, lead, out, order)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """1/f, known through order - 2*lead."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of a zero series")
        ring = self.ring
        a0 = self.coeffs[0]
        if not ring.is_unit(a0):
            raise NonUnitLeading(f"leading coefficient {a0} is not a unit")
        inv = ring.unit_inverse(a0)
        f = self.coeffs
        depth = self.order - self.lead
        b = [inv]
        for k in range(1, depth + 1):
            acc = ring.zero()
            for i in range(1, min(k, len(f) - 1) + 1):
                if f[i] and b[k - i]:
                    acc = acc + f[i] * b[k - i]
            b.append(-(acc * inv))
        return self._build(ring, -self.lead, b, self.order - 2 * self.lead)

    def exact_divide(self, other: "QSeries") -> "QSeries":
        """Quotient h with h * other == self, by long division.

        Each step divides exactly by the leading coefficient of other, so
        that coefficient need not be a unit when the quotient exists.
        """
        if not isinstance(other, QSeries):
            ring = join(self.ring, ring_of(other))
            other = ring.coerce(other)
            return self._build(
                ring,
                self.lead,
                [
                    ring.exact_quotient(ring.coerce(c), other)
                    for c in self.coeffs
                ],
                self.order,
            )
        if other.is_zero():
            raise ZeroDivisionError("division by a zero series")
        ring = join(self.ring, other.ring)
        f, g = self.in_ring(ring), other.in_ring(ring)
        vg = g.lead
        if f.is_zero():
            order = f.order - vg
            return self._build(ring, order + 1, [], order)
        lead = f.lead - vg
        order = min(f.order - vg, g.order - 2 * vg + f.lead)
        g0 = g.coeffs[0]
        inv = ring.unit_inverse(g0) if ring.is_unit(g0) else None
        fc, gc = f.coeffs, g.coeffs
        out: List[Any] = []
        for k in range(order - lead + 1):
            acc = fc[k] if k < len(fc) else ring.zero()
            for i in range(1, min(k, len(gc) - 1) + 1):
                if gc[i] and out[k - i]:
                    acc = acc - gc[i] * out[k - i]
            if inv is not None:
                out.append(acc * inv)
            else:
                out.append(ring.exact_quotient(acc, g0))
        return self._build(ring, lead, out, order)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self.exact_divide(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return self.exact_divide(other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return type(self).one(
                self.ring, self.order - self.lead, self.variable
            )
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus -------------------------------------------------------

    def D(self) -> "QSeries":
        """q d/dq."""
        return self._build(
            self.ring,
            self.lead,
            [c * (self.lead + i) for i, c in enumerate(self.coeffs)],
            self.order,
        )

    def Dinv(self) -> "QSeries":
        """Inverse of q d/dq on series without a q^0 term."""
        if self.lead <= 0 <= self.order and self._c(0):
            raise NonzeroConstantTerm(
                f"D^-1 needs a vanishing {self.variable}^0 coefficient"
            )
        coeffs = []
        for i, c in enumerate(self.coeffs):
            m = self.lead + i
            coeffs.append(c * Fraction(1, m) if m else c)
        return self._build(self.ring, self.lead, coeffs, self.order)

    def d_dq(self) -> "QSeries":
        """Plain derivative d/dq; known through order - 1."""
        return self.D().shift(-1)

    def log_derivative(self) -> "QSeries":
        """D(f)/f."""
        return self.D().exact_divide(self)

    def exp(self) -> "QSeries":
        if not self.is_zero() and self.lead < 1:
            raise BadValuation("exp needs a series without constant term")
        ring = self.ring
        order = self.order
        f = [self._c(k) for k in range(order + 1)]
        e = [ring.one()]
        for n in range(1, order + 1):
            acc = ring.zero()
            for k in range(1, n + 1):
                if f[k] and e[n - k]:
                    acc = acc + f[k] * e[n - k] * k
            e.append(acc * Fraction(1, n))
        return self._build(ring, 0, e, order)

    def log(self) -> "QSeries":
        if self.is_zero() or self.lead != 0 or self.coeffs[0] != 1:
            raise BadValuation("log needs a series 1 + O(q)")
        return self.log_derivative().Dinv()

    # -- composition ----------------------------------------------------

    def compose(self, inner: "QSeries") -> "QSeries":
        """self(inner) by Horner evaluation; inner must have positive
        valuation."""
        if self.lead < 0 and not self.is_zero():
            raise BadValuation("outer series of a composition has poles")
        if not inner.is_zero() and inner.lead < 1:
            raise BadValuation("inner series needs positive valuation")
        ring = join(self.ring, inner.ring)
        inner = inner.in_ring(ring)
        v = inner.lead
        order = min(inner.order, (self.order + 1) * v - 1)
        variable = inner.variable

        def constant(c):
            return inner._build(ring, 0, [ring.coerce(c)], order, variable)

        result = constant(self._c(self.order))
        for n in range(self.order - 1, -1, -1):
            result = (result * inner).truncate(order) + constant(self._c(n))
        return result

    def comp_inverse(self) -> "QSeries":
        """Compositional inverse by Newton iteration with doubling
        precision."""
        if self.is_zero() or self.lead != 1:
            raise BadValuation("compositional inverse needs f = a*q + O(q^2)")
        ring = self.ring
        a = self.coeffs[0]
        if not ring.is_unit(a):
            raise NonUnitLinear(f"linear coefficient {a} is not a unit")
        target = self.order
        derivative = self.d_dq()
        g = self._build(ring, 1, [ring.unit_inverse(a)], 1)
        precision = 1
        while precision < target:
            precision = min(2 * precision, target)
            g = g.extend_order(precision)
            identity = type(self).gen(ring, precision, self.variable)
            residual = self.truncate(precision).compose(g) - identity
            slope = derivative.compose(g)
            g = (g - residual.exact_divide(slope)).truncate(precision)
        return g

    def __repr__(self) -> str:
        shown = []
        for m, c in self.items():
            if len(shown) == 6:
                shown.append("...")
                break
            shown.append(f"({c})*{self.variable}^{m}")
        body = " + ".join(shown) or "0"
        tail = f"O({self.variable}^{self.order + 1})"
        return f"{type(self).__name__}({body} + {tail})"


class XSeries(QSeries):
    """Power series in the formal variable x."""

    default_variable = "x"
    __slots__ = ()


class WSeries(QSeries):
    """Power series in the formal variable w."""

    default_variable = "w"
    __slots__ = ()


def rational_series(terms: Dict[int, Any], order: int) -> QSeries:
    return QSeries(RATIONALS, terms, order)


def qs_mul(f: QSeries, g) -> QSeries:
    return f * g


def qs_div(f: QSeries, g) -> QSeries:
    return f / g


def qs_pow(f: QSeries, n: int) -> QSeries:
    return f**n


def qs_D(f: QSeries) -> QSeries:
    return f.D()


def qs_Dinv(f: QSeries) -> QSeries:
    return f.Dinv()


def qs_exp(f: QSeries) -> QSeries:
    return f.exp()


def qs_log(f: QSeries) -> QSeries:
    return f.log()


def qs_compose(outer: QSeries, inner: QSeries) -> QSeries:
    return outer.compose(inner)


def qs_comp_inverse(f: QSeries) -> QSeries:
    return f.comp_inverse()


def qs_coeff(f: QSeries, m: int):
    return f.coeff(m)


def qs_res(f: QSeries):
    return f.res()


__all__ = [
    "QSeries",
    "XSeries",
    "WSeries",
    "rational_series",
    "qs_mul",
    "qs_div",
    "qs_pow",
    "qs_D",
    "qs_Dinv",
    "qs_exp",
    "qs_log",
    "qs_compose",
    "qs_comp_inverse",
    "qs_coeff",
    "qs_res",
]
