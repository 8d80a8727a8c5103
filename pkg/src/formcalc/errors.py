"""Exception hierarchy shared by the engine, the parser and the CLI."""

from __future__ import annotations


class FormcalcError(Exception):
    """Base class for all errors raised by formcalc."""


class DomainError(FormcalcError, ValueError):
    """Operands live in incompatible spaces (mode, dimension or base point)."""


class ParseError(FormcalcError, ValueError):
    """Lexical or syntactic error in a form expression."""

    def __init__(self, message: str, position: int | None = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(FormcalcError):
    """An operator was applied outside its domain of definition.

    ``residual`` carries the offending quantity, e.g. the nonzero ``d(omega)``
    when a potential is requested for a form that is not closed.
    """

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class UnderResolvedError(FormcalcError, ValueError):
    """A quadrature rule is too coarse to integrate a polynomial integrand exactly."""
