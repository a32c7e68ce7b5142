"""Exception hierarchy shared by all autoseries modules."""


class AutoseriesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AutoseriesError, ValueError):
    """An argument lies outside the mathematical domain of an operation.

    Raised for exponents s <= 1, Hurwitz parameters outside (0, 1],
    violated solver guards, and similar precondition failures.  The
    message names the violated constraint.
    """


class ResourceLimitError(AutoseriesError, RuntimeError):
    """A requested tolerance cannot be met within configured limits.

    Carries the limit that was hit: a term count beyond the hard cap, a
    truncation depth that is too small, or a tolerance below what the
    working precision can certify.
    """
