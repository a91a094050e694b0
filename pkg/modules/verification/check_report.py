from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from modules.qseries.qseries import QSeries
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent

Monomial = Tuple[int, int, int]


@dataclass
class CheckReport:
    """Outcome of one identity check."""

    name: str
    passed: bool
    order: int
    first_failure: Optional[Monomial] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.name} (order {self.order})"
        if self.first_failure is not None:
            q, t, u = self.first_failure
            line += f" first failure at q^{q} t^{t} u^{u}"
        if self.detail:
            line += f": {self.detail}"
        return line


def _lowest_monomial(value: Any) -> Tuple[int, int]:
    """(t, u) exponent of the lowest nonzero term of a coefficient."""
    if isinstance(value, TSeries):
        value = value.known
    if isinstance(value, UFraction):
        value = value.num
    if isinstance(value, TLaurent):
        return next(iter(value.items()))[0]
    if isinstance(value, ULaurent):
        return 0, next(iter(value.items()))[0]
    return 0, 0


def first_failing_monomial(
    lhs: QSeries,
    rhs: QSeries,
    order: Optional[int] = None,
    t_window: Optional[int] = None,
) -> Optional[Monomial]:
    """(q, t, u) of the lowest differing term, or None when lhs == rhs.

    With t_window set, only t-exponents of absolute value at most
    t_window are compared.
    """
    difference = lhs - rhs
    bound = difference.order if order is None else min(order, difference.order)
    for m, c in difference.items():
        if m > bound:
            break
        if t_window is not None:
            if isinstance(c, TSeries):
                c = c.known
            if isinstance(c, TLaurent):
                c = TLaurent(
                    {k: v for k, v in c.items() if abs(k[0]) <= t_window}
                )
                if not c:
                    continue
        t, u = _lowest_monomial(c)
        return m, t, u
    return None


def compare_series(
    name: str,
    lhs: QSeries,
    rhs: QSeries,
    order: Optional[int] = None,
    t_window: Optional[int] = None,
) -> CheckReport:
    failure = first_failing_monomial(lhs, rhs, order, t_window)
    shown = min(lhs.order, rhs.order) if order is None else order
    return CheckReport(name, failure is None, shown, failure)


def compare_values(name: str, lhs: Any, rhs: Any, order: int = 0):
    """Check for equality of two exact values (not series)."""
    if lhs == rhs:
        return CheckReport(name, True, order)
    difference = lhs - rhs
    if isinstance(difference, (int, Fraction)):
        return CheckReport(name, False, order, (0, 0, 0), str(difference))
    t, u = _lowest_monomial(difference)
    return CheckReport(name, False, order, (0, t, u), str(difference))


__all__ = [
    "CheckReport",
    "Monomial",
    "first_failing_monomial",
    "compare_series",
    "compare_values",
]
