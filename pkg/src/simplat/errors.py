"""Exception types shared across the package."""


class SimplatError(Exception):
    """Base class for every error raised by this package."""


class InputError(SimplatError):
    """Bad arguments: wrong type, dimension mismatch, out-of-range value."""


class ParseError(InputError):
    """A complex document is malformed or violates the document schema."""


class ValidationError(SimplatError):
    """A simplex or complex violates a structural invariant."""


class ResourceLimitError(SimplatError):
    """An enumeration would exceed the configured point budget."""


class IntegrityError(SimplatError):
    """An internal cross-check failed; this signals a bug, not bad input."""
