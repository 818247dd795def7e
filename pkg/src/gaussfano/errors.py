"""Exception hierarchy shared by all modules."""


class GaussFanoError(Exception):
    """Base class for every error raised by this package."""


class UnknownVariable(GaussFanoError, KeyError):
    def __init__(self, name, offset=None):
        self.name = name
        self.offset = offset
        msg = f"unknown variable {name!r}"
        if offset is not None:
            msg += f" at byte {offset}"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class PolySyntaxError(GaussFanoError, ValueError):
    """Malformed polynomial text; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class NegativeExponent(PolySyntaxError):
    pass


class ArityMismatch(GaussFanoError, ValueError):
    pass


class RingMismatch(GaussFanoError, ValueError):
    pass


class NotHomogeneous(GaussFanoError, ValueError):
    pass


class NotHomogeneousInST(NotHomogeneous):
    pass


class ComputationBudgetExceeded(GaussFanoError, RuntimeError):
    pass


class ZeroDivisorArgument(GaussFanoError, ValueError):
    pass


class CoincidentPoints(GaussFanoError, ValueError):
    pass


class BadCodimension(GaussFanoError, ValueError):
    pass


class PointNotOnVariety(GaussFanoError, ValueError):
    pass


class LineNotOnVariety(GaussFanoError, ValueError):
    pass


class LineInSingularLocus(GaussFanoError, ValueError):
    pass


class NonzeroRemainder(GaussFanoError, AssertionError):
    pass


class VerificationWindowMismatch(GaussFanoError, AssertionError):
    pass
