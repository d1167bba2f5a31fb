"""Exception hierarchy shared by every module."""


class KvdpError(Exception):
    pass


class InvalidInputError(KvdpError, ValueError):
    pass


class PreconditionError(InvalidInputError):
    """The input is well formed but outside the class the algorithm handles."""


class ParseError(InvalidInputError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class InvariantViolation(KvdpError, AssertionError):
    """An internal guarantee failed; this always indicates a bug."""


class BudgetExceeded(KvdpError):
    pass


class NotFoundError(KvdpError, LookupError):
    pass
