"""
Exception hierarchy shared by all bracetree modules.
"""
from typing import Optional


class BracetreeError(Exception):
    """Base class for every error raised by the package."""


class ConfigurationError(BracetreeError):
    """Invalid environment or command-line configuration."""


class DecorationError(BracetreeError):
    """Unknown decoration symbol or malformed alphabet."""


class TreeSyntaxError(BracetreeError):
    """Tree or combination text does not match the grammar."""

    def __init__(self, text: str, offset: int, message: str):
        self.text = text
        self.offset = offset
        self.message = message
        super().__init__(f"syntax error at offset {offset}: {message} (in {text!r})")


class BasisKindError(BracetreeError):
    """Planar, rooted and forest combinations were mixed."""


class SeriesError(BracetreeError):
    """A series precondition or identity failed."""


class FreenessError(BracetreeError):
    """A degree failed a freeness or generation check."""

    def __init__(
        self,
        degree: int,
        message: str,
        expected: Optional[int] = None,
        actual: Optional[int] = None,
    ):
        self.degree = degree
        self.expected = expected
        self.actual = actual
        super().__init__(f"degree {degree}: {message}")
