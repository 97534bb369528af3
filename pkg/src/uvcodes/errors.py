"""Exception types shared by the package."""


class UVCodesError(Exception):
    """Base class for all errors raised by uvcodes."""


class StructuralError(UVCodesError, ValueError):
    """Operands live in different rings or have incompatible shapes."""


class DomainError(UVCodesError, ValueError):
    """An operation was called outside its mathematical domain."""


class BudgetError(UVCodesError, RuntimeError):
    """An enumeration would exceed the configured codeword budget."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class ParseError(UVCodesError, ValueError):
    """Syntax error in a ring or polynomial expression."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
