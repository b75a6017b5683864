"""Exception hierarchy shared by every module.

Each class carries a short ``kind`` string used in the CLI's JSON error
payload.
"""


class CCSymError(Exception):
    kind = "Error"


class NonPrimeModulus(CCSymError, ValueError):
    kind = "NonPrimeModulus"


class InvalidOrder(CCSymError, ValueError):
    kind = "InvalidOrder"


class RingMismatch(CCSymError, ValueError):
    kind = "RingMismatch"


class NotAUnit(CCSymError, ArithmeticError):
    kind = "NotAUnit"


class InsufficientPrecision(CCSymError, ArithmeticError):
    kind = "InsufficientPrecision"

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class BadParameter(CCSymError, ValueError):
    kind = "BadParameter"


class FieldOnly(CCSymError, ValueError):
    kind = "FieldOnly"


class DomainError(CCSymError, ValueError):
    kind = "DomainError"


class ShapeMismatch(CCSymError, ValueError):
    kind = "ShapeMismatch"


class NotInUnitGroup(CCSymError, ValueError):
    kind = "NotInUnitGroup"


class ExprSyntaxError(CCSymError, ValueError):
    """Parse failure at a byte offset, with the set of tokens that would have been accepted."""

    kind = "SyntaxError"

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(sorted(expected))


class InternalError(CCSymError, RuntimeError):
    """A structural guarantee was violated (termination bound or known shape)."""

    kind = "InternalError"
