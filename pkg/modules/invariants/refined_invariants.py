from dataclasses import dataclass
from typing import Dict, List, Optional

from modules.forms.form_series import tilde_dg2_sum
from modules.genfun.euler_specializations import a_at_y1, x_at_y1, xk_at_y1
from modules.genfun.genfun_engine import GenFunEngine
from modules.genfun.ktrivial import Surface, ktrivial_genfun
from modules.invariants.thm_higher import inverse_tilde_delta
from modules.invariants.x_expansion import x_expand, x_reconstruct
from modules.qseries.qseries import QSeries
from modules.ring_core.errors import PolynomialityWindowError, QSeriesError
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries
from modules.ring_core.ulaurent import ULaurent
from modules.verification.check_report import CheckReport
from utils.qjf_logger import qjf_log


@dataclass(frozen=True)
class RefinedInvariant:
    surface: str
    g: int
    delta: int
    i: int
    value: ULaurent

    def is_palindromic(self) -> bool:
        return self.value.is_palindromic()

    def at_y1(self):
        """Value at y = 1 (for i = delta a count of delta-nodal curves)."""
        return self.value.evaluate(1)


def k3_xK_polynomiality(
    g: int, order: Optional[int] = None, t_order: Optional[int] = None
) -> TLaurent:
    """Coeff_{q^(g-1)}(x K) from the t-series K, checked to be a Laurent
    polynomial: every t-exponent in (g + 1, known order] must vanish."""
    order = g if order is None else order
    t_order = 2 * g + 4 if t_order is None else t_order
    if g - 1 > order:
        raise QSeriesError(f"q^{g - 1} lies beyond order {order}")
    k = GenFunEngine(max(order, 1), t_order).series_K().series
    coefficient = k.coeff(g - 1)
    product = coefficient * TLaurent.x()
    if not isinstance(product, TSeries):
        product = TSeries.from_tlaurent(product, t_order)
    if product.t_order <= g + 1:
        raise PolynomialityWindowError(
            f"t-order {product.t_order} leaves no window above t^{g + 1}"
        )
    known = product.known
    stray = [e for e in known.t_exponents() if e > g + 1]
    if stray:
        raise PolynomialityWindowError(
            f"Coeff q^{g - 1} of x K has t^{stray[0]} beyond t^{g + 1}"
        )
    return known


def _top_coefficient(surface: Surface, g: int, k: int, order: int):
    """Laurent polynomial sum_i N^i x^(chi(L) - 1 - i) with g fixed."""
    series = ktrivial_genfun(surface, k, order=order, times_x=True).series
    return series.coeff(g - 1)


def refined_invariants(
    surface, g: int, k: int = 0, order: Optional[int] = None
) -> List[RefinedInvariant]:
    """N^i of a genus g system with k point conditions, i = 0 .. chi(L)-1."""
    try:
        surface = surface if isinstance(surface, Surface) else Surface(surface)
        order = max(g - 1, 1) if order is None else order
        p = _top_coefficient(surface, g, k, order)
        # x K carries one extra power of x
        degree_bound = g if surface is Surface.ABELIAN else g + 1
        values = x_expand(p, degree_bound)
        if x_reconstruct(values, degree_bound) != p:
            raise QSeriesError(f"x-expansion of genus {g} does not rebuild")
        delta = surface.delta(g, k)
        return [
            RefinedInvariant(surface.value, g, delta, i, value)
            for i, value in enumerate(values)
        ]
    except Exception as e:
        qjf_log.error(f"refined_invariants error: {e}")
        raise e


def numconj_series(surface, k: int, order: int) -> QSeries:
    """tildeDG2^k (D tildeDG2)^(1 - chi/2) / tildeDelta^(chi/2)."""
    surface = surface if isinstance(surface, Surface) else Surface(surface)
    dg2 = tilde_dg2_sum(order + 1)
    if surface is Surface.ABELIAN:
        base = dg2.D()
    else:
        base = inverse_tilde_delta(order + 1)
    if k:
        base = dg2**k * base
    return base.truncate(order)


def euler_invariants_check(surface, k: int, order: int) -> CheckReport:
    """N^i evaluated at y = 1 against the x-expansion of the y = 1
    closed forms X^k A (abelian) and X^k x K (K3)."""
    surface = surface if isinstance(surface, Surface) else Surface(surface)
    name = f"N^i at y = 1 {surface.value} k = {k}"
    inner = order + 1 if surface is Surface.K3 else order
    if surface is Surface.ABELIAN:
        closed = a_at_y1(inner)
    else:
        closed = xk_at_y1(inner)
    if k:
        closed = x_at_y1(inner) ** k * closed
    closed = closed.truncate(order)
    extra = 0 if surface is Surface.ABELIAN else 1
    for g in range(max(2 - surface.chi, 0), order + 2):
        exact = [n.at_y1() for n in refined_invariants(surface, g, k, order)]
        values = x_expand(closed.coeff(g - 1), g + extra)
        expected = [v.evaluate(1) for v in values]
        if exact != expected:
            return CheckReport(
                name, False, order, (g - 1, 0, 0), f"{exact} != {expected}"
            )
    return CheckReport(name, True, order)


class InvariantsEngine:
    """Refined invariants of abelian and K3 surfaces up to q^order."""

    def __init__(self, order: int, t_order: Optional[int] = None) -> None:
        try:
            self.order = order
            self.t_order = t_order
        except Exception as e:
            qjf_log.error(f"InvariantsEngine __init__ error: {e}")
            raise e

    def __enter__(self) -> "InvariantsEngine":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def invariants(self, surface, g: int, k: int = 0):
        try:
            if g - 1 > self.order:
                raise ValueError(f"genus {g} needs order >= {g - 1}")
            return refined_invariants(surface, g, k, self.order)
        except Exception as e:
            qjf_log.error(f"InvariantsEngine invariants error: {e}")
            raise e

    def table(
        self, surface, k: int, gmax: int
    ) -> Dict[int, List[RefinedInvariant]]:
        """N^i for every genus up to gmax that carries invariants."""
        try:
            surface = (
                surface if isinstance(surface, Surface) else Surface(surface)
            )
            out = {}
            for g in range(max(surface.min_genus(k), 0), gmax + 1):
                if g - 1 > self.order or g < 2 - surface.chi:
                    continue
                out[g] = refined_invariants(surface, g, k, self.order)
            qjf_log.debug(f"table {surface.value} k = {k}: {len(out)} genera")
            return out
        except Exception as e:
            qjf_log.error(f"InvariantsEngine table error: {e}")
            raise e

    def top_terms(self, surface, k: int) -> QSeries:
        try:
            return numconj_series(surface, k, self.order)
        except Exception as e:
            qjf_log.error(f"InvariantsEngine top_terms error: {e}")
            raise e


__all__ = [
    "RefinedInvariant",
    "InvariantsEngine",
    "k3_xK_polynomiality",
    "refined_invariants",
    "numconj_series",
    "euler_invariants_check",
]
