"""Exception types shared across the package."""


class PartlocError(Exception):
    """Base class for all package errors."""


class ShapeError(PartlocError):
    """Operands have incompatible or unexpected dimensions."""


class ConfigError(PartlocError):
    """A configuration value is out of range or malformed."""


class DataFormatError(PartlocError):
    """A serialized file is corrupt; carries the byte offset when known."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class LookupError_(PartlocError):
    """An id (category, part) is not present in the active spec."""


class DependencyError(PartlocError):
    """A required artifact (checkpoint, model) is missing."""


class DeterminismError(PartlocError):
    """A function expected to be deterministic returned differing values."""


class NumericsError(PartlocError):
    """A non-finite value appeared where finite math was required."""
