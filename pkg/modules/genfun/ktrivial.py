from enum import Enum
from typing import List, Optional

from modules.genfun.genfun_engine import GenFunEngine, GenSeries
from modules.qseries.qseries import QSeries
from modules.verification.check_report import CheckReport
from utils.qjf_logger import qjf_log


class Surface(Enum):
    """K-trivial surfaces with their holomorphic Euler characteristic."""

    ABELIAN = "abelian"
    K3 = "k3"

    @property
    def chi(self) -> int:
        return 0 if self is Surface.ABELIAN else 2

    def chi_l(self, g: int) -> int:
        """chi(L) for a curve class of arithmetic genus g."""
        return g - 1 + self.chi

    def delta(self, g: int, k: int) -> int:
        """Dimension of the linear subsystem after k point conditions."""
        return self.chi_l(g) - 1 - k

    def min_genus(self, k: int) -> int:
        """Smallest g with a nonzero q^(g-1) coefficient."""
        return k + 2 - self.chi


class Variant(Enum):
    POINT_CONDITIONS = "point-conditions"
    HYPERPLANE = "hyperplane"


def _coerce_surface(surface) -> Surface:
    return surface if isinstance(surface, Surface) else Surface(surface)


def _coerce_variant(variant) -> Variant:
    return variant if isinstance(variant, Variant) else Variant(variant)


def ktrivial_genfun(
    surface,
    k: int,
    variant=Variant.POINT_CONDITIONS,
    order: int = 10,
    t_order: Optional[int] = None,
    times_x: bool = False,
) -> GenSeries:
    """X^k A (abelian) or X^k K (K3); H^k in the hyperplane variant.

    With times_x the K3 series uses x K, whose coefficients are Laurent
    polynomials in t.
    """
    try:
        surface = _coerce_surface(surface)
        variant = _coerce_variant(variant)
        if k < 0:
            raise ValueError(f"k must be non-negative, got {k}")
        # K starts at q^-1, so the other factors need one more term
        inner = order + 1 if surface is Surface.K3 else order
        engine = GenFunEngine(inner, t_order)
        if surface is Surface.ABELIAN:
            base = engine.series_A().series
        elif times_x:
            base = engine.series_xK().series
        else:
            base = engine.series_K().series
        if k == 0:
            return GenSeries(
                surface.value, base.truncate(order), engine.t_order
            )
        if variant is Variant.POINT_CONDITIONS:
            factor = engine.series_X().series
        else:
            factor = engine.series_H().series
        series = (factor**k * base).truncate(order)
        qjf_log.debug(
            f"{surface.value} {variant.value} k = {k} to q^{series.order}"
        )
        return GenSeries(surface.value, series, engine.t_order)
    except Exception as e:
        qjf_log.error(f"ktrivial_genfun error: {e}")
        raise e


def vanishing_check(
    surface, k: int, order: int, variant=Variant.POINT_CONDITIONS
) -> CheckReport:
    """Coeff_{q^(g-1)} = 0 for every g below the dimension bound."""
    surface = _coerce_surface(surface)
    variant = _coerce_variant(variant)
    series = ktrivial_genfun(surface, k, variant, order, times_x=True).series
    name = f"vanishing {surface.value} {variant.value} k = {k}"
    for g in range(surface.min_genus(k)):
        if g - 1 > series.order:
            break
        if series.coeff(g - 1):
            return CheckReport(name, False, series.order, (g - 1, 0, 0))
    return CheckReport(name, True, series.order)


def coefficient_genera(series: QSeries) -> List[int]:
    """Genera g with a nonzero q^(g-1) coefficient."""
    return [m + 1 for m, _ in series.items()]


__all__ = [
    "Surface",
    "Variant",
    "ktrivial_genfun",
    "vanishing_check",
    "coefficient_genera",
]
