"""Exception hierarchy shared by every module."""


class CovboundError(Exception):
    """Base class for all errors raised by covbound."""


class NotPrimePower(CovboundError, ValueError):
    pass


class LengthMismatch(CovboundError, ValueError):
    pass


class BudgetExceeded(CovboundError):
    """An exhaustive computation would exceed the configured work budget."""

    def __init__(self, needed, budget, what="computation"):
        self.needed = needed
        self.budget = budget
        self.what = what
        super().__init__(f"{what} needs ~{needed} elementary operations, budget is {budget}")


class TrivialCode(CovboundError, ValueError):
    pass


class NotAnExtension(CovboundError, ValueError):
    pass


class BadParams(CovboundError, ValueError):
    pass


class SelfCheckFailed(CovboundError):
    pass


class MethodInapplicable(CovboundError, ValueError):
    pass


class MissingParam(CovboundError, ValueError):
    pass


class MissingAux(CovboundError, ValueError):
    pass


class RadiusNotVerified(CovboundError):
    pass


class RadiusTooLarge(CovboundError, ValueError):
    pass


class NotPerfect(CovboundError, ValueError):
    pass


class NothingApplicable(CovboundError):
    pass


class QEven(CovboundError, ValueError):
    pass


class OutOfRange(CovboundError, ValueError):
    pass


class NotFound(CovboundError, LookupError):
    """No embedded table value for the requested parameters."""


class DegenerateCoordinate(CovboundError):
    pass


class CodeFormatError(CovboundError, ValueError):
    pass
