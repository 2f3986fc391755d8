"""
mfold_bounds.exceptions - Errors raised by the numeric modules
"""


class MFoldError(Exception):
    """Base error for the package"""


class SeriesError(MFoldError, ValueError):
    """A series operation precondition failed"""


class TruncationError(SeriesError):
    """A series is not long enough for the requested coefficients"""


class NormalizationError(SeriesError):
    """A series is not of the normalized form z + a_2 z^2 + ..."""


class ParameterError(MFoldError, ValueError):
    """Class parameters or arguments are out of range"""

    param: str = None

    def __init__(self, msg: str, param: str = None):
        super().__init__(msg)
        self.param = param


class DegenerateError(MFoldError, ArithmeticError):
    """A denominator or the class functional vanishes"""
