"""Exception types shared across the package."""


class NilorbError(Exception):
    """Base class for all package errors."""


class IncomparableSizeError(NilorbError):
    """Bipartitions of different totals were compared."""


class InvalidSymbolError(NilorbError):
    """An orbit symbol violates its defining constraints."""


class RankMismatchError(NilorbError):
    """Two symbols of different type or rank were compared."""


class UnsupportedTypeError(NilorbError):
    """The requested operation is not defined for this Lie type."""


class NotInImageError(NilorbError):
    """A bipartition lies outside the image family of the Springer map."""


class FamilyDomainError(NilorbError):
    """A bipartition lies outside the domain of a hull/piece map."""


class NotNilpotentError(NilorbError):
    """A finite-field functional is not nilpotent."""


class ZeroSymbolError(NilorbError):
    """The filtration recursion was asked to step the zero symbol."""


class ConstructionError(NilorbError):
    """A Chevalley-basis construction failed an internal consistency check."""


class ParameterUnavailableError(NilorbError):
    """A table representative needs a field element that does not exist over F_q."""
