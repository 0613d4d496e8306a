"""Exception types raised by wavefft."""


class WaveletError(ValueError):
    """Base class for all library errors."""


class InvalidFilterError(WaveletError):
    pass


class InvalidInputError(WaveletError):
    pass


class InvalidLengthError(InvalidInputError):
    """Transform length is not a power of two."""


class ConditionOFailedError(WaveletError):
    """A test that presupposes orthogonality was given a non-orthogonal filter."""


class NoSolutionError(WaveletError):
    """The integer-value eigensystem has no eigenvalue 1."""


class DegenerateFilterError(WaveletError):
    """Eigenvalue 1 of the integer-value eigensystem is repeated."""


class NotApplicableError(WaveletError):
    pass


class InsufficientDataError(WaveletError):
    pass
