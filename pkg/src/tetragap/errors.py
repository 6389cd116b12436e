"""
Exception hierarchy. Every error carries the CLI exit code it maps to.
"""
from .config import EXIT_VERIFICATION, EXIT_INPUT, EXIT_DEGENERATE


class TetragapError(Exception):
    """Base class for all tetragap errors."""

    exit_code = EXIT_VERIFICATION


class FieldError(TetragapError, ArithmeticError):
    """Division by zero or operands from different quadratic fields."""

    exit_code = EXIT_VERIFICATION


class LiteralError(FieldError, ValueError):
    """Malformed scalar literal."""

    exit_code = EXIT_INPUT


class PreconditionError(TetragapError, ValueError):
    """Input geometry violates a precondition (orientation, interior point, ...)."""

    exit_code = EXIT_INPUT


class DegeneracyError(TetragapError):
    """Critical or supercritical inradius: the apex does not exist."""

    exit_code = EXIT_DEGENERATE


class VerificationError(TetragapError):
    """An exact identity failed. Never expected; signals a bug."""

    exit_code = EXIT_VERIFICATION
