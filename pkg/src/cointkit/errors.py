"""Exception hierarchy shared across the toolkit."""


class CointkitError(Exception):
    """Base class for every error raised by cointkit."""


class InvalidInputError(CointkitError, ValueError):
    pass


class DomainError(InvalidInputError):
    """A value lies outside the domain of a transform (e.g. log of a nonpositive number)."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InsufficientObservationsError(InvalidInputError):
    def __init__(self, required, available, what="regression"):
        super().__init__(
            f"{what} needs at least {required} observations, only {available} available"
        )
        self.required = required
        self.available = available


class SingularDesignError(CointkitError, ArithmeticError):
    """The design matrix is rank deficient (or a regressor has zero variance)."""


class ConfigurationError(CointkitError, ValueError):
    pass


class UnsupportedSampleError(ConfigurationError):
    pass


class DataFormatError(InvalidInputError):
    """Base for CSV ingestion problems; carries row/column when known."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class SchemaError(DataFormatError):
    pass


class ContinuityError(DataFormatError):
    pass


class ParseError(DataFormatError):
    pass
