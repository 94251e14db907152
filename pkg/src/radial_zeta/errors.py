"""Exception hierarchy."""


class RadialZetaError(Exception):
    pass


class DomainError(RadialZetaError, ValueError):
    """Argument outside the half-plane / strip an operation is defined on."""


class NearZeroOperand(RadialZetaError, ArithmeticError):
    """An argument ratio was requested with an (under)flowed operand."""


class DegenerateSystem(RadialZetaError, ArithmeticError):
    pass


class SingularPitch(RadialZetaError, ArithmeticError):
    """sin(y ln 2) vanishes; use center_geometric(z, 0) instead."""


class SingularStep(RadialZetaError, ArithmeticError):
    """A sin/tan denominator of the step formula vanishes at this n."""


class SingularTangent(RadialZetaError, ArithmeticError):
    """tan(y ln((N+2)/(N+1))) vanishes; retry with N + 1."""


class EtaPole(RadialZetaError, ArithmeticError):
    """1 - 2^{1-z} vanishes."""


class NumericalBreakdown(RadialZetaError, ArithmeticError):
    pass


class BudgetExceeded(RadialZetaError):
    """Tolerance not reached within the allowed number of terms.

    ``result`` carries the best estimate obtained.
    """

    def __init__(self, message, result):
        super().__init__(message)
        self.result = result


class ParseError(RadialZetaError, ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MonotonicityError(RadialZetaError, ValueError):
    pass
