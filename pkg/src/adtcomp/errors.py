"""Exception types shared across adtcomp.

Every error subclasses ValueError as well, so callers that only know about
ValueError keep working.
"""


class AdtError(Exception):
    """Base class for adtcomp errors"""


class DimensionMismatchError(AdtError, ValueError):
    """Matrix or vector shapes do not line up"""


class PreconditionError(AdtError, ValueError):
    """Operation called outside the parameter range it is defined for"""


class CodeFormatError(AdtError, ValueError):
    """A serialized code or matrix could not be interpreted"""


__all__ = [
    "AdtError",
    "DimensionMismatchError",
    "PreconditionError",
    "CodeFormatError",
]
