from dataclasses import dataclass
from functools import lru_cache

from sympy import divisors

from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import TLAURENTS
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent


@dataclass(frozen=True)
class FgFormula:
    """f_g(y, t): the chi_{-y} genera of the relative Hilbert schemes of a
    genus g system on an abelian surface, one t-power per Euler
    characteristic."""

    g: int
    value: TLaurent

    def is_symmetric(self) -> bool:
        return self.value.is_t_symmetric()

    def vanishes_at_t_equal_u(self) -> bool:
        return not self.value.specialize_t_to_u()

    def support_is_valid(self) -> bool:
        """Every t-exponent e satisfies |e| <= g - 1 and e | (g - 1)."""
        for e in self.value.t_exponents():
            if abs(e) > self.g - 1:
                return False
            if e and (self.g - 1) % e:
                return False
        return True


@lru_cache(maxsize=64)
def abelian_fg(g: int) -> FgFormula:
    """sum_{e | g-1} [e]_y (t^e + t^-e - u^e - u^-e) ((g - 1)/e)^2."""
    if g < 2:
        raise ValueError(f"f_g needs g >= 2, got {g}")
    total = TLaurent.zero()
    for e in divisors(g - 1):
        n = (g - 1) // e
        bracket = TLaurent({(e, 0): 1, (-e, 0): 1, (0, e): -1, (0, -e): -1})
        total = total + bracket * ULaurent.quantum_integer(e) * (n * n)
    return FgFormula(g, total)


def fg_series(order: int) -> QSeries:
    """sum_{g>=2} f_g q^(g-1) through q^order."""
    return QSeries(
        TLAURENTS,
        {g - 1: abelian_fg(g).value for g in range(2, order + 2)},
        order,
    )


__all__ = ["FgFormula", "abelian_fg", "fg_series"]
