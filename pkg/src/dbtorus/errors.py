"""Exception hierarchy shared by every module."""


class DeBruijnError(Exception):
    """Base class for all errors raised by dbtorus."""


class InvalidInput(DeBruijnError, ValueError):
    pass


class InvalidLength(InvalidInput):
    pass


class InvalidWindow(InvalidInput):
    pass


class InvalidOrder(InvalidInput):
    pass


class InvalidCycle(InvalidInput):
    pass


class NotDeBruijn(InvalidInput):
    pass


class SizeCondition(InvalidInput):
    """The counting condition m * r == |A| ** l (or its torus analogue) fails."""


class NotEulerian(DeBruijnError):
    pass


class NotFound(DeBruijnError):
    """Exhaustive search finished without a solution."""


class BudgetExceeded(DeBruijnError):
    """Search stopped at its node-expansion cap before finishing."""

    def __init__(self, message: str, expansions: int):
        super().__init__(message)
        self.expansions = expansions


class WrapFailure(DeBruijnError):
    """The stacked array does not close up into a torus."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(DeBruijnError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RenderError(DeBruijnError):
    pass
