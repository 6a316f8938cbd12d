"""Exception hierarchy shared by all fjsolve modules."""


class FJSolveError(Exception):
    pass


class NotPositiveSemidefinite(FJSolveError, ValueError):
    pass


class UnsupportedWeight(FJSolveError, ValueError):
    pass


class OddWeightUnsupported(UnsupportedWeight):
    pass


class CoefficientLawViolation(FJSolveError, ValueError):
    """Two (n, r) with equal discriminant and equal r mod 2m carry different coefficients."""


class GradingViolation(FJSolveError, ValueError):
    pass


class HolomorphyViolation(FJSolveError, ValueError):
    pass


class ComponentMismatch(FJSolveError, ValueError):
    pass


class PrecisionExceeded(FJSolveError, ValueError):
    pass


class InsufficientPrecision(FJSolveError, ValueError):
    """Truncated expansions are too short to separate a space that is known to be independent."""


class TableRangeExceeded(FJSolveError, KeyError):
    pass


class ParseError(FJSolveError, ValueError):
    pass


class ValidationError(FJSolveError, ValueError):
    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)
