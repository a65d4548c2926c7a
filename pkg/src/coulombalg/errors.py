"""Exception types shared across the library."""


class AlgebraError(Exception):
    """Base class for all mathematical errors raised by this package."""


class TableMismatchError(AlgebraError):
    """Two operands live over different variable tables."""


class ReductionError(AlgebraError):
    """A denominator cannot be expressed inside the declared multiplicative set."""


class MorphismError(AlgebraError):
    """A substitution map is inconsistent with the ring it is applied to."""


class ExpressionError(AlgebraError):
    """An expression string failed to parse or evaluate."""


class ProblemError(AlgebraError):
    """A problem description file is malformed or unsupported."""
