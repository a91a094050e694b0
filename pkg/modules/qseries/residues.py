from fractions import Fraction
from typing import Any, List

from modules.qseries.qseries import QSeries
from modules.ring_core.errors import BadValuation, OutOfRange


def lagrange_coefficient(f: QSeries, n: int) -> Any:
    """Coefficient of w^n in the compositional inverse of f = a*w + ...,

    computed as (1/n) Res_{w=0} f^{-n} = (1/n) Coeff_{w^(n-1)} (f/w)^{-n}.
    """
    if n < 1:
        raise OutOfRange("Lagrange coefficients start at n = 1")
    if f.is_zero() or f.lead != 1:
        raise BadValuation("Lagrange inversion needs f = a*w + O(w^2)")
    h = f.shift(-1)
    return (h**-n).coeff(n - 1) * Fraction(1, n)


def residue_expansion(f: QSeries, g: QSeries, kmax: int) -> List[Any]:
    """Coefficients c_0..c_kmax with f = sum c_k g^k + O(g^(kmax+1)).

    c_k = Res f g'/g^(k+1) = Coeff_{q^(k+1)} f * Dg * (g/q)^-(k+1).
    kmax is bounded by the known order of f * Dg, which is typically
    g.order - 1 when f has a constant term.
    """
    if g.is_zero() or g.lead != 1:
        raise BadValuation("residue expansion needs g = a*q + O(q^2)")
    normalized_inverse = g.shift(-1).inverse()
    weighted = f * g.D()
    # every power of g/q is known to the same order
    limit = (weighted * normalized_inverse).order - 1
    if kmax > limit:
        raise OutOfRange(
            f"residue expansion is known through g^{limit}, not g^{kmax}"
        )
    out = []
    power = normalized_inverse
    for k in range(kmax + 1):
        out.append((weighted * power).coeff(k + 1))
        power = power * normalized_inverse
    return out


def reconstruct(coefficients: List[Any], g: QSeries) -> QSeries:
    """sum_k coefficients[k] * g^k."""
    total = QSeries.zero(g.ring, g.order, g.variable)
    power = QSeries.one(g.ring, g.order, g.variable)
    for c in coefficients:
        total = total + power * c
        power = power * g
    return total


__all__ = ["lagrange_coefficient", "residue_expansion", "reconstruct"]
