"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line front end can map
failures onto its documented exit statuses without a lookup table.
"""


class ArmeyError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1
    stage = None


class ConfigError(ArmeyError, ValueError):
    exit_code = 2


class DomainError(ConfigError):
    """An argument lies outside the domain of the operation."""


class DataError(ArmeyError, ValueError):
    exit_code = 3


class SchemaError(DataError):
    """A required column is missing from the input file."""


class FormatError(DataError):
    """The input file is malformed (duplicate years, bad header, ...)."""


class GapError(DataError):
    """Years are not consecutive."""


class NumericalError(ArmeyError, ArithmeticError):
    exit_code = 4


class EstimabilityError(NumericalError):
    """Not enough observations for the number of parameters."""


class CollinearityError(NumericalError):
    """Design matrix is rank deficient.

    Attributes
    ----------
    column : int
        Position of the first column found to be (numerically) a linear
        combination of the preceding ones.
    name : str or None
        Column name when known.
    """

    def __init__(self, message, column=None, name=None):
        super().__init__(message)
        self.column = column
        self.name = name


class DegenerateError(NumericalError):
    """Zero variance or an otherwise degenerate input."""


class LengthError(NumericalError):
    """Series too short for the requested test configuration."""


class RecursiveResidualError(NumericalError):
    """Leading sub-design singular; reorder the observations or drop columns."""


class NoInteriorMaximumError(NumericalError):
    """The fitted quadratic has no interior maximum.

    Attributes
    ----------
    shape : str
        ``"U"`` or ``"monotone-degenerate"``.
    """

    def __init__(self, message, shape):
        super().__init__(message)
        self.shape = shape


class ReplicationAssertionError(ArmeyError):
    exit_code = 5


class DataWarning(UserWarning):
    """A cell was flagged missing during a transformation."""
