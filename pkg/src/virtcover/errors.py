"""Exception hierarchy.

Everything a well-formed request can fail with derives from
:class:`DiagramError`; malformed text raises :class:`CodeSyntaxError`.
"""


class DiagramError(Exception):
    """A domain precondition was violated."""


class InvalidCode(DiagramError):
    """The code breaks a structural invariant (chord pairing, slot range...)."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid code")


class NotAKnot(DiagramError):
    pass


class NotACutSystem(DiagramError):
    pass


class NotEven(DiagramError):
    pass


class NonEmptyCutSet(DiagramError):
    pass


class BadComponent(DiagramError):
    pass


class TooLarge(DiagramError):
    pass


class NotApplicable(DiagramError):
    pass


class MissingRotation(DiagramError):
    pass


class InfeasibleOrientation(DiagramError):
    """No orientation of the requested flavor exists.

    ``component`` names the component with an odd number of flip points,
    ``chord`` the chord whose endpoint constraint closed an odd cycle.
    """

    def __init__(self, message, component=None, chord=None):
        self.component = component
        self.chord = chord
        super().__init__(message)


class CodeSyntaxError(ValueError):
    """Text does not follow the code grammar."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
