"""Exception types raised by polysieve."""


class PolySieveError(Exception):
    """Base class for all library errors."""


class RangeUnavailable(PolySieveError, ValueError):
    """A sieve function was queried outside the range where its explicit form holds."""


class NoRootInRange(PolySieveError, ValueError):
    pass


class DomainError(PolySieveError, ValueError):
    pass


class Infeasible(PolySieveError, ValueError):
    """No admissible beta0 exists for the requested degree."""


class NotSquarefree(PolySieveError, ValueError):
    pass


class ConditionFailed(PolySieveError, ValueError):
    """The polynomial has a fixed prime divisor, so the sieve products degenerate."""

    def __init__(self, msg, prime=None):
        super().__init__(msg)
        self.prime = prime


class PolynomialParseError(PolySieveError, ValueError):
    pass


class RangeTooLarge(PolySieveError, ValueError):
    pass


class Unfactored(PolySieveError, RuntimeError):
    """Pollard rho ran out of its iteration budget."""


class ParameterError(PolySieveError, ValueError):
    pass
