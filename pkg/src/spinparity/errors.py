"""Exception hierarchy shared by all modules."""


class SpinParityError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(SpinParityError, ValueError):
    """An argument is outside its documented domain."""


class PreconditionError(SpinParityError, ValueError):
    """The input violates a mathematical precondition (purity, rank, ...)."""


class UnsupportedConventionError(SpinParityError, ValueError):
    """The operation is not defined for the density convention supplied."""


class DegenerateFieldError(InvalidArgumentError):
    """A field direction was requested for a vanishing field."""


class ConstructionError(SpinParityError, ValueError):
    """A density matrix failed its normalization checks on construction."""


class NumericConsistencyError(SpinParityError, ArithmeticError):
    """Two evaluation routes disagree, or a residue exceeds its tolerance."""
