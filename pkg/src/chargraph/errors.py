"""Exception types shared across the package."""


class ChargraphError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ChargraphError, ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(ChargraphError):
    """An input is legal but larger than the configured exhaustive-search cap."""


class CatalogError(ChargraphError):
    """The bundled group catalog is malformed or a lookup failed."""


class ShapeSyntaxError(ChargraphError, ValueError):
    """A shape expression failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PropertyViolation(ChargraphError):
    """A verified structural property failed; indicates bad data or a bug."""
