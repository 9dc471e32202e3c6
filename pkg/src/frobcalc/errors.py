"""Exception hierarchy. The CLI maps these onto exit codes."""


class FrobcalcError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FrobcalcError):
    """Malformed polynomial / ideal text, or invalid ring data."""


class RingMismatchError(FrobcalcError):
    """Operands live over different ring descriptors."""


class ExponentOverflowError(FrobcalcError):
    """An exponent would exceed the configured machine bound."""


class ResourceGuardError(FrobcalcError):
    """An enumeration would exceed the configured resource guard."""


class UnsupportedIdealClassError(FrobcalcError):
    """The operation is only defined for monomial or complete-intersection ideals."""


class NonArtinianError(FrobcalcError):
    """The quotient ring is not artinian but the operation requires it."""


class NotFSplitError(FrobcalcError):
    """A splitting witness was required but none exists."""


class VerificationError(FrobcalcError):
    """An internal invariant or runtime verification band tripped."""
