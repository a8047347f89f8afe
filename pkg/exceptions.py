"""Error types raised by the algebra kernel and the services.

Every error carries a human readable `detail` and the process exit code the
command line should end with when the error escapes a command.
"""

from constants import ExitCodes


class FsingError(Exception):
    exit_code = ExitCodes.USAGE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class StructuralError(FsingError):
    """Operands live in different ambient rings."""


class ArgumentError(FsingError):
    """An argument violates an operation's precondition."""


class RingValidationError(FsingError):
    """A ring presentation failed validation (non-prime p, inhomogeneous generator)."""


class ParseError(FsingError):
    def __init__(self, detail: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {detail}")
        self.line = line
        self.column = column


class ResourceExhausted(FsingError):
    """A configured budget (pair reductions, degree cap, sampling tries) ran out."""


class CertificateError(FsingError):
    """An internal certificate failed to re-check; indicates a bug, never a verdict."""
