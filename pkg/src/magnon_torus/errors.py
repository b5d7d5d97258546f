"""Exception hierarchy. Each class carries the CLI exit status it maps to."""


class MagnonTorusError(Exception):
    exit_code = 1


class ValidationError(MagnonTorusError, ValueError):
    """Input violates a structural or regime constraint."""

    exit_code = 1


class DimensionError(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class SizeError(ValidationError):
    pass


class DegenerateTorusError(MagnonTorusError, ValueError):
    exit_code = 1

    def __init__(self, message, collapsed):
        super().__init__(message)
        self.collapsed = collapsed


class InfeasibleDualError(MagnonTorusError):
    exit_code = 2


class InstabilityError(MagnonTorusError, ArithmeticError):
    """Bogoliubov diagonalization invalid (|Lambda/omega| >= 1)."""

    exit_code = 3


class ConvergenceError(MagnonTorusError, ArithmeticError):
    exit_code = 3

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class OutputError(MagnonTorusError, OSError):
    exit_code = 4
