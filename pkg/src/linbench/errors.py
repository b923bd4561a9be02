"""Exception types shared across the library."""


class LinbenchError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(LinbenchError, ValueError):
    """A precondition on an argument was violated."""


class SingularMatrixError(LinbenchError):
    """Exact singularity: a zero pivot survived partial pivoting."""


class NotPositiveDefiniteError(LinbenchError):
    """A non-positive pivot appeared during Cholesky factorization."""


class RankDeficientError(LinbenchError):
    """A least-squares matrix has (numerically) dependent columns."""


class DegenerateMarginError(LinbenchError):
    """A trade matrix has a zero row or column sum; the message names it."""


class TradeCsvParseError(LinbenchError):
    """Malformed trade-flow CSV row; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class TaskExecutionError(LinbenchError):
    """A benchmark kernel raised; carries task and variant identity."""

    def __init__(self, task_id: str, variant_name: str, cause: BaseException):
        super().__init__(f"task {task_id!r} variant {variant_name!r} failed: {cause}")
        self.task_id = task_id
        self.variant_name = variant_name
        self.cause = cause
