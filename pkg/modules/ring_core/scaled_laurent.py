from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterator, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def simplify_rational(value: Scalar) -> Scalar:
    """Return an int when a Fraction is integral."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def scale_rationals(
    terms: Dict[Hashable, Scalar]
) -> Tuple[Dict[Hashable, int], int]:
    """Bring rational coefficients over one positive common denominator."""
    den = 1
    for value in terms.values():
        if isinstance(value, Fraction) and value.denominator != 1:
            d = value.denominator
            den = den * d // gcd(den, d)
    scaled = {}
    for key, value in terms.items():
        if isinstance(value, Fraction):
            numerator = value.numerator * (den // value.denominator)
        else:
            numerator = int(value) * den
        if numerator:
            scaled[key] = numerator
    return scaled, den


class ScaledLaurent:
    """Sparse Laurent polynomial stored as integer numerators over a
    shared positive denominator.

    Canonical form: no zero numerators, and the denominator is coprime to
    the content of the numerators (den == 1 for the zero polynomial).
    Subclasses fix the key type and the key addition used by products.
    """

    __slots__ = ("_terms", "_den", "_hash")

    def __init__(self, terms: Dict[Hashable, Scalar] = None) -> None:
        scaled, den = scale_rationals(terms or {})
        self._set(scaled, den)

    def _set(self, terms: Dict[Hashable, int], den: int) -> None:
        if not terms:
            self._terms, self._den = {}, 1
        else:
            if den < 0:
                terms = {k: -v for k, v in terms.items()}
                den = -den
            if den != 1:
                g = gcd(den, *terms.values())
                if g != 1:
                    terms = {k: v // g for k, v in terms.items()}
                    den //= g
            self._terms, self._den = terms, den
        self._hash = None

    @classmethod
    def _from_scaled(cls, terms: Dict[Hashable, int], den: int):
        obj = cls.__new__(cls)
        obj._set({k: v for k, v in terms.items() if v}, den)
        return obj

    @classmethod
    def zero(cls):
        return cls._from_scaled({}, 1)

    @classmethod
    def constant(cls, value: Scalar):
        value = as_rational(value)
        return cls._from_scaled(
            {cls._unit_key(): value.numerator}, value.denominator
        )

    @classmethod
    def one(cls):
        return cls.constant(1)

    @staticmethod
    def _unit_key() -> Hashable:
        raise NotImplementedError

    # -- inspection -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[Tuple[Hashable, Fraction]]:
        den = self._den
        for key in sorted(self._terms):
            yield key, simplify_rational(Fraction(self._terms[key], den))

    @property
    def terms(self) -> Dict[Hashable, Scalar]:
        return dict(self.items())

    @property
    def denominator(self) -> int:
        return self._den

    def coefficient_at(self, key: Hashable) -> Scalar:
        numerator = self._terms.get(key, 0)
        return simplify_rational(Fraction(numerator, self._den))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and self._unit_key() in self._terms
        )

    def constant_term(self) -> Scalar:
        return self.coefficient_at(self._unit_key())

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        da, db = self._den, other._den
        if da == db:
            out = dict(self._terms)
            for key, value in other._terms.items():
                out[key] = out.get(key, 0) + value
            return type(self)._from_scaled(out, da)
        g = gcd(da, db)
        fa, fb = db // g, da // g
        out = {k: v * fa for k, v in self._terms.items()}
        for key, value in other._terms.items():
            out[key] = out.get(key, 0) + value * fb
        return type(self)._from_scaled(out, da * fa)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_scaled(
            {k: -v for k, v in self._terms.items()}, self._den
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, value: Scalar):
        value = as_rational(value)
        if value == 1:
            return self
        if not value:
            return type(self).zero()
        p, q = value.numerator, value.denominator
        return type(self)._from_scaled(
            {k: v * p for k, v in self._terms.items()}, self._den * q
        )

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._den == other._den and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            key = frozenset(self._terms.items())
            self._hash = hash((type(self).__name__, self._den, key))
        return self._hash


__all__ = [
    "Rational",
    "Scalar",
    "ScaledLaurent",
    "as_rational",
    "simplify_rational",
    "scale_rationals",
]
