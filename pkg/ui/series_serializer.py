import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from modules.qseries.qseries import QSeries
from modules.ring_core.coefficient_rings import (
    RATIONALS,
    TLAURENTS,
    ULAURENTS,
    TSeriesRing,
)
from modules.ring_core.errors import ConfigError, DenominatorNotCleared
from modules.ring_core.tlaurent import TLaurent
from modules.ring_core.tseries import TSeries
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent
from utils.qjf_logger import qjf_log

FORMATS = ("json", "csv", "text")
VARIABLE_ORDER = ["q", "t", "u"]

Term = Tuple[int, int, int, Fraction]
_RINGS = {
    "rationals": RATIONALS,
    "ulaurents": ULAURENTS,
    "tlaurents": TLAURENTS,
}


def format_rational(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def _monomials(value: Any) -> Iterable[Tuple[int, int, Fraction]]:
    """(t, u, c) of a single coefficient."""
    if isinstance(value, TSeries):
        value = value.known
    if isinstance(value, UFraction):
        if not value.is_laurent():
            raise DenominatorNotCleared(f"cannot serialize {value}")
        value = value.to_ulaurent()
    if isinstance(value, TLaurent):
        for (t, u), c in value.items():
            yield t, u, c
    elif isinstance(value, ULaurent):
        for u, c in value.items():
            yield 0, u, c
    elif value:
        yield 0, 0, Fraction(value)


def _ring_name(series: QSeries) -> str:
    if isinstance(series.ring, TSeriesRing):
        return "tseries"
    if series.ring is TLAURENTS:
        return "tlaurents"
    if series.ring is RATIONALS:
        return "rationals"
    return "ulaurents"


@dataclass
class SerializedSeries:
    """Sorted (q, t, u, c) terms of a truncated series."""

    name: str
    order: int
    ring: str
    terms: List[Term] = field(default_factory=list)
    t_order: Optional[int] = None

    @classmethod
    def from_series(cls, name: str, series: QSeries) -> "SerializedSeries":
        terms = [
            (m, t, u, Fraction(c))
            for m, value in series.items()
            for t, u, c in _monomials(value)
        ]
        terms.sort(key=lambda term: term[:3])
        t_order = getattr(series.ring, "t_order", None)
        return cls(name, series.order, _ring_name(series), terms, t_order)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "variable_order": VARIABLE_ORDER,
            "order": self.order,
            "t_order": self.t_order,
            "ring": self.ring,
            "terms": [
                {"q": m, "t": t, "u": u, "c": format_rational(c)}
                for m, t, u, c in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SerializedSeries":
        if data.get("variable_order", VARIABLE_ORDER) != VARIABLE_ORDER:
            raise ConfigError(f"unexpected variables {data['variable_order']}")
        terms = [
            (int(t["q"]), int(t["t"]), int(t["u"]), parse_rational(t["c"]))
            for t in data["terms"]
        ]
        return cls(
            data.get("name", ""),
            int(data["order"]),
            data.get("ring", "tlaurents"),
            terms,
            data.get("t_order"),
        )

    def to_series(self) -> QSeries:
        grouped: Dict[int, Dict[Tuple[int, int], Fraction]] = {}
        for m, t, u, c in self.terms:
            grouped.setdefault(m, {})[(t, u)] = c
        if self.ring == "tseries":
            ring = TSeriesRing(self.t_order)
        elif self.ring in _RINGS:
            ring = _RINGS[self.ring]
        else:
            raise ConfigError(f"unknown ring {self.ring}")
        terms = {}
        for m, d in grouped.items():
            value = TLaurent(d)
            if self.ring == "tseries":
                value = TSeries(value, self.t_order)
            elif self.ring != "tlaurents":
                value = value.to_ulaurent()
                if self.ring == "rationals":
                    value = value.constant_term()
            terms[m] = value
        return QSeries(ring, terms, self.order)


def _series_text(name: str, series: QSeries) -> str:
    lines = [f"{name} through {series.variable}^{series.order}"]
    for m, c in series.items():
        if isinstance(c, TSeries):
            c = f"{c.known} + O(t^{c.t_order + 1})"
        lines.append(f"  {series.variable}^{m}: {c}")
    return "\n".join(lines) + "\n"


def _csv(rows: List[List[Any]], header: List[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def serialize_series(name: str, series: QSeries, fmt: str = "json") -> str:
    try:
        if fmt not in FORMATS:
            raise ConfigError(f"unknown format {fmt}")
        if fmt == "text":
            return _series_text(name, series)
        data = SerializedSeries.from_series(name, series)
        if fmt == "json":
            return json.dumps(data.to_dict(), indent=2) + "\n"
        return _csv(
            [[m, t, u, format_rational(c)] for m, t, u, c in data.terms],
            ["q", "t", "u", "c"],
        )
    except Exception as e:
        qjf_log.error(f"serialize_series error: {e}")
        raise e


def deserialize_series(text: str, fmt: str = "json") -> QSeries:
    """Inverse of serialize_series for json and csv (csv as tlaurents,
    with the order taken from the highest q-exponent)."""
    try:
        if fmt == "json":
            return SerializedSeries.from_dict(json.loads(text)).to_series()
        if fmt == "csv":
            reader = csv.DictReader(io.StringIO(text))
            terms = [
                (int(r["q"]), int(r["t"]), int(r["u"]), parse_rational(r["c"]))
                for r in reader
            ]
            order = max((t[0] for t in terms), default=0)
            return SerializedSeries("", order, "tlaurents", terms).to_series()
        raise ConfigError(f"cannot read series from format {fmt}")
    except Exception as e:
        qjf_log.error(f"deserialize_series error: {e}")
        raise e


def serialize_invariants(
    surface: str, k: int, table: Dict[int, list], fmt: str = "text"
) -> str:
    """N^i(y) for each genus of a table, as u-exponent/coefficient terms."""
    try:
        if fmt not in FORMATS:
            raise ConfigError(f"unknown format {fmt}")
        rows = [
            inv
            for g in sorted(table)
            for inv in table[g]
        ]
        if fmt == "json":
            data = {
                "surface": surface,
                "k": k,
                "invariants": [
                    {
                        "g": inv.g,
                        "delta": inv.delta,
                        "i": inv.i,
                        "terms": [
                            {"u": u, "c": format_rational(c)}
                            for u, c in inv.value.items()
                        ],
                    }
                    for inv in rows
                ],
            }
            return json.dumps(data, indent=2) + "\n"
        if fmt == "csv":
            return _csv(
                [
                    [inv.g, inv.delta, inv.i, u, format_rational(c)]
                    for inv in rows
                    for u, c in inv.value.items()
                ],
                ["g", "delta", "i", "u", "c"],
            )
        lines = [f"{surface} k = {k}"]
        for inv in rows:
            lines.append(
                f"  g = {inv.g} delta = {inv.delta} N^{inv.i} = {inv.value}"
            )
        return "\n".join(lines) + "\n"
    except Exception as e:
        qjf_log.error(f"serialize_invariants error: {e}")
        raise e


__all__ = [
    "FORMATS",
    "VARIABLE_ORDER",
    "SerializedSeries",
    "format_rational",
    "parse_rational",
    "serialize_series",
    "deserialize_series",
    "serialize_invariants",
]
