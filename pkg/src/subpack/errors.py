"""Exception hierarchy shared by every module."""


class SubpackError(Exception):
    """Base class for all errors raised by this package."""


class SizeError(SubpackError):
    pass


class DomainError(SubpackError, ValueError):
    """Input outside the mathematical domain of an operation."""


class RankError(SubpackError, ValueError):
    def __init__(self, message, rank):
        super().__init__(message)
        self.rank = rank


class OrthonormalityError(SubpackError, ValueError):
    def __init__(self, message, deviation):
        super().__init__(message)
        self.deviation = deviation


class FieldError(SubpackError, ValueError):
    """Complex data supplied where a real field was declared."""


class ParameterMismatchError(SubpackError, ValueError):
    """Objects that must share (field, k, m) or n do not."""


class ParseError(SubpackError, ValueError):
    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
