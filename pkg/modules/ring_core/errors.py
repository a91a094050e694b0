class QSeriesError(ArithmeticError):
    """Base class for failures of exact series arithmetic."""


class NonDivisible(QSeriesError):
    """Exact division left a nonzero remainder."""


class NotSymmetric(QSeriesError):
    """A t-Laurent polynomial is not invariant under t -> 1/t."""


class NonUnitLeading(QSeriesError):
    """Division by a series whose leading coefficient is not a unit."""


class NonzeroConstantTerm(QSeriesError):
    """D^-1 applied to a series with a q^0 term."""


class BadValuation(QSeriesError):
    pass


class NonUnitLinear(QSeriesError):
    pass


class OutOfRange(QSeriesError):
    """Coefficient requested beyond the known truncation order."""


class PrefactorImbalance(QSeriesError):
    """Fractional q or half-integer u/t powers failed to cancel."""


class DegreeOverflow(QSeriesError):
    pass


class PolynomialityWindowError(QSeriesError):
    """Nonzero t-coefficients found where a polynomial must vanish."""


class DenominatorNotCleared(QSeriesError):
    """A UFraction result did not reduce to a Laurent polynomial."""


class NonMonomialTarget(QSeriesError):
    pass


class ConfigError(ValueError):
    """Invalid command-line or settings configuration."""


__all__ = [
    "QSeriesError",
    "NonDivisible",
    "NotSymmetric",
    "NonUnitLeading",
    "NonzeroConstantTerm",
    "BadValuation",
    "NonUnitLinear",
    "OutOfRange",
    "PrefactorImbalance",
    "DegreeOverflow",
    "PolynomialityWindowError",
    "DenominatorNotCleared",
    "NonMonomialTarget",
    "ConfigError",
]
