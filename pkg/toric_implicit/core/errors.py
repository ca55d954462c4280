"""Exception hierarchy shared by every toric_implicit module."""
from typing import Optional, Tuple


class ToricImplicitError(Exception):
    """Base class. Not a ValueError, so pydantic validators re-raise it untouched."""


class PolynomialSyntaxError(ToricImplicitError):
    def __init__(self, message: str, position: int, source: str = ""):
        self.message = message
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        """Source line with a caret under the offending character."""
        return f"{self.source}\n{' ' * self.position}^"


class DivisionByZeroError(ToricImplicitError, ZeroDivisionError):
    pass


class DegenerateSupport(ToricImplicitError):
    pass


class ContainmentError(ToricImplicitError):
    def __init__(self, point: Tuple[int, int], message: Optional[str] = None):
        self.point = tuple(point)
        super().__init__(message or f"support point {self.point} lies outside d*Q")


class NonSquareError(ToricImplicitError):
    pass


class SizeGuardError(ToricImplicitError):
    pass


class FormatError(ToricImplicitError):
    def __init__(self, message: str, offset: int = 0):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} (byte offset {offset})")


class SamplingExhausted(ToricImplicitError):
    pass


class InsufficientSamples(ToricImplicitError):
    pass
