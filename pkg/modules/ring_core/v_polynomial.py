from functools import lru_cache
from typing import List, Sequence

from modules.ring_core.tlaurent import TLaurent, symmetric_check
from modules.ring_core.ulaurent import ULaurent


@lru_cache(maxsize=128)
def _v_power(d: int) -> TLaurent:
    """(t + 1/t)^d."""
    return TLaurent._from_scaled({(1, 0): 1, (-1, 0): 1}, 1) ** d


class VPolynomial:
    """Polynomial in v = t + 1/t with ULaurent coefficients.

    coefficients[d] multiplies v^d; trailing zeros are dropped.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[ULaurent]) -> None:
        coefficients = [ULaurent.zero() + c for c in coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self.coefficients: List[ULaurent] = coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, d: int) -> ULaurent:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return ULaurent.zero()

    def to_tlaurent(self) -> TLaurent:
        total = TLaurent.zero()
        for d, c in enumerate(self.coefficients):
            if c:
                total = total + _v_power(d) * c
        return total

    def taylor_shift(self, w: ULaurent) -> List[ULaurent]:
        """Coefficients b with P(v) = sum b[i] (v - w)^i."""
        work = list(self.coefficients)
        out: List[ULaurent] = []
        while work:
            # synthetic division by (v - w)
            remainder = work[-1]
            quotient = [ULaurent.zero()] * (len(work) - 1)
            for d in range(len(work) - 2, -1, -1):
                quotient[d] = remainder
                remainder = work[d] + remainder * w
            out.append(remainder)
            work = quotient
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, VPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None

    def __repr__(self) -> str:
        terms = [
            f"({c})*v^{d}" for d, c in enumerate(self.coefficients) if c
        ]
        return "VPolynomial(" + (" + ".join(terms) or "0") + ")"


def symmetrize_to_v(p: TLaurent) -> VPolynomial:
    """The unique polynomial P with P(t + 1/t) = p."""
    symmetric_check(p)
    if not p:
        return VPolynomial([])
    top = p.max_t
    coefficients = [ULaurent.zero()] * (top + 1)
    remainder = p
    while remainder:
        d = remainder.max_t
        c = remainder.coefficient(d)
        coefficients[d] = c
        remainder = remainder - _v_power(d) * c
    return VPolynomial(coefficients)


__all__ = ["VPolynomial", "symmetrize_to_v"]
