"""Exception types shared across the package."""


class QCrystalsError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyInput(QCrystalsError):
    """An operation that needs a non-empty word or tableau received an empty one."""


class InvalidPair(QCrystalsError):
    """A (P, Q) insertion/recording pair is malformed."""


class EntryOutOfRange(QCrystalsError):
    """A tableau entry exceeds the declared alphabet bound."""


class InvalidParameters(QCrystalsError):
    """Arguments are structurally valid but incompatible (sizes, bounds)."""


class NotSymmetric(QCrystalsError):
    """A fundamental-basis expansion is not a symmetric function."""


class DegreeMismatch(QCrystalsError):
    """Terms of different homogeneous degrees were mixed in one expansion."""


class EmptyExpansion(QCrystalsError):
    """An operation that needs a non-zero expansion received the zero one."""


class InternalError(QCrystalsError):
    """Defensive cap tripped; indicates a bug, not bad input."""
