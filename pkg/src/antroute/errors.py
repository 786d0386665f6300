"""Exception types shared across the package."""


class RoutingError(Exception):
    """Base class for all antroute errors."""


class MapFormatError(RoutingError):
    """A map file violates the expected line format or its internal consistency."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnreachableError(RoutingError):
    """No feasible path exists between the requested endpoints."""


class NoDirectionError(UnreachableError):
    """The colony never produced an arrived walker, so no direction was found."""
