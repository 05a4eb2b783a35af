"""Exception types shared across the package."""


class SelfAdjError(Exception):
    """Base class for every error raised by this package."""


class Unsupported(SelfAdjError):
    """Input is valid mathematics the exact machinery does not cover (CLI exit 2)."""


class IrreducibleFactor(Unsupported):
    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"denominator has a rational-irreducible factor: {factor}")


class UnsupportedWeightClass(Unsupported):
    pass


class UnsupportedEndpoint(Unsupported):
    pass


class InvalidOperator(SelfAdjError):
    pass


class NotARoot(SelfAdjError):
    pass


class InconsistentSystem(SelfAdjError):
    pass


class InsufficientMoments(SelfAdjError):
    pass


class ZeroNormMember(SelfAdjError):
    pass


class NonzeroOrderZeroTerm(SelfAdjError):
    def __init__(self, a0):
        self.a0 = a0
        super().__init__(f"composition produces a nonzero order-zero term a_0 = {a0}")


class ConstraintViolation(SelfAdjError):
    def __init__(self, constraint: str):
        self.constraint = constraint
        super().__init__(f"requires {constraint}")


class UnknownFamily(SelfAdjError):
    pass
