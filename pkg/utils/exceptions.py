"""
Toolkit exception hierarchy.

Every error the services raise on purpose derives from RoutingToolkitError so the
CLI can report it as a one-line message.
"""


class RoutingToolkitError(Exception):
    """Base class for all toolkit errors."""


class ConfigurationError(RoutingToolkitError):
    """Raised when a parameter combination cannot be used."""


class InstanceFormatError(RoutingToolkitError):
    """Raised when an instance file cannot be parsed or validated."""

    def __init__(self, message: str, line: int = None):
        super().__init__(message)
        self.line = line


class UnreachableDestinationError(RoutingToolkitError):
    """Raised when the destination cannot be reached from the source."""


class ObjectiveDomainError(RoutingToolkitError, ValueError):
    """Raised for arguments outside the domain of an objective formula."""


class DimensionMismatchError(RoutingToolkitError, ValueError):
    """Raised when a vector or matrix does not match the model dimension."""


class SpinDomainError(RoutingToolkitError, ValueError):
    """Raised when a spin vector has entries other than -1 and +1."""


class CimDivergenceError(RoutingToolkitError):
    """Raised when the amplitude integration produces a non-finite value."""

    def __init__(self, message: str, step: int, spin: int):
        super().__init__(message)
        self.step = step
        self.spin = spin


class OracleOverflowError(RoutingToolkitError):
    """Raised when an exact oracle would exceed its size limit."""
