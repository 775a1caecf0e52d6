"""Exception types shared across the package."""


class GroupError(Exception):
    """Base class for all package errors."""


class CapExceeded(GroupError):
    """An enumeration grew past its order cap."""


class ContextMismatch(GroupError):
    """Elements from different groups were combined."""


class InvalidAction(GroupError):
    """Generator images do not define a homomorphism into Aut(T)."""


class BadParameter(GroupError, ValueError):
    pass


class UnsupportedCase(GroupError):
    """Parameters fall outside the families this package can build."""


class PreconditionFailed(GroupError):
    pass


class MalformedInput(GroupError, ValueError):
    """A group file, manifest or descriptor could not be parsed."""
