"""
Error Types
Exceptions raised across the toolkit and the exit codes they map to
"""


class NCGeomError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1


class DomainError(NCGeomError, ValueError):
    """Argument outside the mathematical domain (alpha, order, positivity, ...)"""

    exit_code = 3


class ShapeMismatchError(DomainError):
    """Operands live on different algebras or carry incompatible orders"""


class ParseError(NCGeomError):
    """Malformed JSON input"""

    exit_code = 2


class SolverError(NCGeomError):
    """Iterative solver did not reach the requested tolerance"""

    exit_code = 4


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = ParseError.exit_code
EXIT_DOMAIN_ERROR = DomainError.exit_code
EXIT_SOLVER_ERROR = SolverError.exit_code
