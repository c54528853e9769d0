"""Exception hierarchy.

``InputError`` subclasses signal a bad invocation (CLI exit status 1);
everything else derived from ``PentaspaceError`` signals that a
mathematical check failed or could not be carried out (exit status 2).
"""


class PentaspaceError(Exception):
    pass


class InputError(PentaspaceError, ValueError):
    pass


class ParseError(InputError):
    pass


class ZeroDenominator(InputError, ZeroDivisionError):
    pass


class NotPositive(InputError):
    pass


class NotNearlyRegular(InputError):
    pass


class NotToricGeneric(InputError):
    pass


class NonLatticePolygon(InputError):
    pass


class InsufficientSamples(InputError):
    pass


class BoundsTooSmall(InputError):
    pass


class InvalidProfile(InputError):
    pass


class SingularMatrix(PentaspaceError, ArithmeticError):
    pass


class EmptyOrUnbounded(PentaspaceError, ValueError):
    pass


class GeometryError(PentaspaceError):
    """An internal consistency check on a polygon failed."""


class ShapeAssertion(GeometryError):
    pass


class DegenerateSamples(PentaspaceError):
    pass


class InconsistentSamples(PentaspaceError):
    pass


class VerificationFailed(PentaspaceError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
