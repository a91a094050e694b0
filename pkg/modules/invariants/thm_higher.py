from functools import lru_cache

from modules.forms.form_series import tilde_delta_product
from modules.invariants.s_polynomials import P_poly
from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import UFRACTIONS, ULAURENTS
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log


def _signed_pairs(m: int):
    """(n, d) with n d = m, both signs."""
    for d in range(1, m + 1):
        if m % d == 0:
            n = m // d
            yield n, d
            yield -n, -d


@lru_cache(maxsize=16)
def inverse_tilde_delta(order: int) -> QSeries:
    """1 / tildeDelta through q^order (lead q^-1)."""
    return tilde_delta_product(order + 2).inverse()


@lru_cache(maxsize=64)
def thm_higher_K(h: int, order: int) -> QSeries:
    """sum_g N^(g-h) q^(g-1) on a K3 surface through q^order.

    h = 0 gives 1/tildeDelta; h >= 1 uses P_(h-1)(y, d - n).
    """
    try:
        if h < 0:
            raise ValueError(f"h must be non-negative, got {h}")
        inverse = inverse_tilde_delta(order)
        if h == 0:
            return inverse
        P = P_poly(h - 1)
        scale = UFraction(ULaurent.u_minus_u_inverse()) ** h
        terms = {}
        for m in range(1, order + 2):
            total = UFraction.zero()
            for n, d in _signed_pairs(m):
                sign = 1 if d > 0 else -1
                total = total + P.evaluate(d - n) * ULaurent.monomial(
                    2 * d, sign
                )
            terms[m] = total / scale
        lattice = QSeries(UFRACTIONS, terms, order + 1).in_ring(ULAURENTS)
        return inverse * lattice
    except Exception as e:
        qjf_log.error(f"thm_higher_K error: {e}")
        raise e


@lru_cache(maxsize=64)
def thm_higher_A(h: int, order: int) -> QSeries:
    """sum_g N^(g-h) q^(g-1) on an abelian surface through q^order."""
    try:
        if h < 2:
            raise ValueError(f"abelian top terms need h >= 2, got {h}")
        P = P_poly(h - 1)
        scale = UFraction(ULaurent.u_minus_u_inverse()) ** h
        terms = {}
        for m in range(1, order + 1):
            total = UFraction.zero()
            for n, d in _signed_pairs(m):
                sign = 1 if d > 0 else -1
                weight = (ULaurent.monomial(2 * d) - 1) * (sign * n * n)
                total = total + P.evaluate(d) * weight
            terms[m] = total / scale
        return QSeries(UFRACTIONS, terms, order).in_ring(ULAURENTS)
    except Exception as e:
        qjf_log.error(f"thm_higher_A error: {e}")
        raise e


__all__ = ["thm_higher_K", "thm_higher_A", "inverse_tilde_delta"]
