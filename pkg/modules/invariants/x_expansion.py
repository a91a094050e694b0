from typing import List

from modules.ring_core.errors import DegreeOverflow
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.ulaurent import ULaurent
from modules.ring_core.v_polynomial import symmetrize_to_v


def _w() -> ULaurent:
    """w = u + 1/u, so that x = v - w for v = t + 1/t."""
    return ULaurent({1: 1, -1: 1})


def x_expand(p: TLaurent, g: int) -> List[ULaurent]:
    """N^0 .. N^(g-1) with p = sum_i N^i x^(g-1-i).

    p is rewritten as a polynomial in v = t + 1/t and Taylor expanded at
    v = w.
    """
    if g < 1:
        raise DegreeOverflow(f"x-expansion needs g >= 1, got {g}")
    poly = symmetrize_to_v(p)
    if poly.degree > g - 1:
        raise DegreeOverflow(
            f"degree {poly.degree} in x exceeds g - 1 = {g - 1}"
        )
    taylor = poly.taylor_shift(_w())
    taylor += [ULaurent.zero()] * (g - len(taylor))
    return [taylor[g - 1 - i] for i in range(g)]


def x_reconstruct(invariants: List[ULaurent], g: int) -> TLaurent:
    """sum_i N^i x^(g-1-i)."""
    x = TLaurent.x()
    total = TLaurent.zero()
    for i, n in enumerate(invariants):
        if n:
            total = total + x ** (g - 1 - i) * n
    return total


__all__ = ["x_expand", "x_reconstruct"]
