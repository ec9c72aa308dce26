"""Named error types.

Every domain failure raises a subclass of :class:`DomainError`, so callers
(and the CLI) can report the class name. Malformed input text raises
:class:`ParseError` instead.
"""


class DomainError(ValueError):
    """Input is well formed but outside the domain of an operation."""


class OutOfRange(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class BadEntry(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class QuasiReflection(DomainError):
    pass


class NotContractible(DomainError):
    pass


class SingularComponent(DomainError):
    pass


class Unclassified(DomainError):
    pass


class NotForkType(DomainError):
    pass


class NotInMm(DomainError):
    pass


class CapExceeded(DomainError):
    def __init__(self, cap):
        super().__init__(f"no complement with n <= {cap}")
        self.cap = cap


class NotAmple(DomainError):
    pass


class OverDegree(DomainError):
    pass


class NotKlt(DomainError):
    pass


class NoComplement(DomainError):
    pass


class BoundaryOnNode(DomainError):
    pass


class IndexNotBig(DomainError):
    pass


class NoReducedCurve(DomainError):
    pass


class BelowRange(DomainError):
    pass


class BadCase(DomainError):
    pass


class NotElliptic(DomainError):
    pass


class MultipleForbidden(DomainError):
    pass


class Infeasible(DomainError):
    pass


class UnknownCommand(DomainError):
    pass


class ParseError(ValueError):
    """Malformed text input; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class OverUnit(DomainError):
    """A different coefficient came out above 1 (input was not plt)."""

    def __init__(self, value):
        super().__init__(f"coefficient {value} exceeds 1")
        self.value = value
