"""Exception hierarchy shared by all icosa modules."""


class IcosaError(Exception):
    """Base class for every error raised by icosa."""


# numfield
class NotMonic(IcosaError):
    pass


class DegreeZero(IcosaError):
    pass


class FieldMismatch(IcosaError):
    pass


class ReducibleModulus(IcosaError, ZeroDivisionError):
    """Raised when a nonzero residue is not invertible.

    ``factor`` holds the nontrivial monic gcd of the element with the
    modulus (low-to-high Fraction coefficients), so callers that work in a
    product of fields can split on it.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class CompositeModulus(IcosaError):
    pass


# polyalg
class ArityMismatch(IcosaError):
    pass


class UnknownVariable(IcosaError):
    pass


class DegreeZeroInVar(IcosaError):
    pass


class BadLeadingCoefficient(IcosaError):
    pass


class ParseError(IcosaError):
    pass


class NotExactDivision(IcosaError, ArithmeticError):
    pass


# grouprep
class ClosureBoundExceeded(IcosaError):
    pass


class SingularGenerator(IcosaError):
    pass


class UnsupportedPower(IcosaError):
    pass


class NonIntegralMultiplicity(IcosaError):
    pass


class UnsupportedEigenvalue(IcosaError):
    pass


class InvalidInput(IcosaError):
    pass


class NonIsolatedFixedLocus(IcosaError):
    pass


# hashimoto
class UnsupportedIndex(IcosaError):
    pass


class QuadricPoint(IcosaError):
    pass


class IndeterminatePoint(IcosaError):
    pass


class NotOnSurface(IcosaError):
    pass


class NonIntegral(IcosaError):
    pass


# conicbundle
class NotANode(IcosaError):
    pass


class ChartMissesPoint(IcosaError):
    pass


class DegenerateQuadraticPart(IcosaError):
    pass


class NotOnConic(IcosaError):
    pass


class SingularConic(IcosaError):
    pass


class PointNotOnConic(IcosaError):
    pass


class LineIsComponent(IcosaError):
    pass


class NotSquareFree(IcosaError):
    pass


class DegreeDropped(IcosaError):
    pass


class PrimeDividesLeading(IcosaError):
    pass


# u4w3
class MethodMismatch(IcosaError):
    pass


class BasisDegenerate(IcosaError):
    pass


# verifier
class UnknownFormat(IcosaError):
    pass
