"""Exception hierarchy shared by every leafcon module."""


class LeafconError(Exception):
    """Base class for all errors raised by leafcon."""


class GraphConstructionError(LeafconError, ValueError):
    """An edge list names a loop or an out-of-range endpoint."""


class ParameterError(LeafconError, ValueError):
    """A numeric parameter lies outside the range an operation accepts."""


class PreconditionError(LeafconError, ValueError):
    """The input graph violates a structural precondition (e.g. connectivity)."""


class CapabilityError(LeafconError):
    """The input exceeds a documented implementation bound."""


class NumericalError(LeafconError, ArithmeticError):
    """An iterative numerical kernel failed to converge or saw bad input."""


class DomainError(LeafconError, ValueError):
    """A closed-form bound was evaluated outside its domain (negative radicand)."""


class Graph6ParseError(LeafconError, ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
