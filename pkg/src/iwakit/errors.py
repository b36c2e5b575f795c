"""Exception types shared across the toolkit."""


class IwakitError(Exception):
    """Base class for all toolkit errors."""


class InsufficientPrecisionError(IwakitError):
    """An operation needs more known p-adic digits than the input carries."""


class MismatchedPrimeError(IwakitError):
    """Two operands live over different primes."""


class NotAUnitError(IwakitError):
    """Inversion requested for an element with positive valuation."""


class NotInMaximalIdealError(IwakitError):
    """A binomial-series power needs its base in the ideal (p, T)."""


class UncertifiedError(IwakitError):
    """Truncated data cannot settle the requested invariant."""


class WindowTooSmallError(IwakitError):
    """The degree window cannot hold the requested answer."""


class InsufficientDataError(IwakitError):
    """Too few data points for a fit."""


class ReducibleError(IwakitError):
    """A family constructor produced a reducible polynomial."""


class DegenerateError(IwakitError):
    """Family parameters fall outside the allowed locus."""


class NotDisjointError(IwakitError):
    """No shift produced a valid compositum polynomial."""


class HypothesisViolationError(IwakitError):
    """A record does not satisfy the hypotheses of the requested check."""


class MissingRecordsError(IwakitError):
    """A scan was asked about parameters with no record available."""

    def __init__(self, missing):
        self.missing = list(missing)
        super().__init__(f"no records for parameters: {self.missing}")
