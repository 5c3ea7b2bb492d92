"""Exception types raised across the package."""


class ApproxDFTError(Exception):
    """Base class for errors raised by approxdft."""


class DimensionError(ApproxDFTError, ValueError):
    """Shapes or lengths of operands do not agree."""


class DataError(ApproxDFTError, ValueError):
    """Input samples are malformed (NaN, infinite, unparsable)."""


class InvalidSizeError(ApproxDFTError, ValueError):
    pass


class ParameterError(ApproxDFTError, ValueError):
    pass


class DegenerateCandidateError(ApproxDFTError, ValueError):
    """A quantized matrix has an all-zero row and cannot be normalized."""


class EmptySearchError(ApproxDFTError):
    """No expansion factor in the searched range gave an admissible matrix."""
