from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import (
    CoefficientRing,
    RATIONALS,
    TLAURENTS,
    ULAURENTS,
)

# monomial t^a u^b, None for 1
Shift = Optional[Tuple[int, int]]
Factor = Tuple[Shift, int]


def _shifted(value: Any, shift: Shift) -> Any:
    if shift is None:
        return value
    return value.shifted(shift[0], shift[1])


def apply_factor(c: List[Any], n: int, shift: Shift, power: int) -> None:
    """Multiply the dense list c (q^0 .. q^G) by (1 - q^n m)^power in place."""
    top = len(c) - 1
    if power > 0:
        for _ in range(power):
            for j in range(top, n - 1, -1):
                src = c[j - n]
                if src:
                    c[j] = c[j] - _shifted(src, shift)
    else:
        for _ in range(-power):
            for j in range(n, top + 1):
                src = c[j - n]
                if src:
                    c[j] = c[j] + _shifted(src, shift)


def ring_for(factors: Sequence[Factor]) -> CoefficientRing:
    shifts = [s for s, _ in factors if s is not None and s != (0, 0)]
    if any(s[0] for s in shifts):
        return TLAURENTS
    if shifts:
        return ULAURENTS
    return RATIONALS


def euler_product(
    factors: Sequence[Factor],
    order: int,
    ring: Optional[CoefficientRing] = None,
) -> QSeries:
    """prod_{n>0} prod_{(m, e)} (1 - q^n m)^e through q^order."""
    factors = [
        (None if s is None or s == (0, 0) else s, e) for s, e in factors
    ]
    ring = ring or ring_for(factors)
    c = [ring.one()] + [ring.zero()] * order
    for n in range(1, order + 1):
        for shift, power in factors:
            apply_factor(c, n, shift, power)
    return QSeries.from_list(ring, 0, c, order)


def theta_pair(shift: Tuple[int, int], power: int = 1) -> List[Factor]:
    """(1 - q^n m)^power (1 - q^n / m)^power."""
    return [(shift, power), ((-shift[0], -shift[1]), power)]


@lru_cache(maxsize=64)
def eta_power(k: int, order: int) -> QSeries:
    """prod_{n>0} (1 - q^n)^k over the rationals."""
    return euler_product([(None, k)], order, RATIONALS)


__all__ = [
    "Shift",
    "Factor",
    "apply_factor",
    "ring_for",
    "euler_product",
    "theta_pair",
    "eta_power",
]
