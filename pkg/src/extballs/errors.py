"""Exception hierarchy shared by all modules."""


class ExtBallsError(Exception):
    """Base class for every error raised by the package."""


class NotPrime(ExtBallsError, ValueError):
    pass


class NotPrimePower(ExtBallsError, ValueError):
    pass


class PolynomialNotIrreducible(ExtBallsError, ValueError):
    pass


class PolynomialNotPrimitive(ExtBallsError, ValueError):
    pass


class DivisionByZero(ExtBallsError, ZeroDivisionError):
    pass


class DlogOfZero(ExtBallsError, ValueError):
    pass


class FieldMismatch(ExtBallsError, ValueError):
    pass


class DomainViolation(ExtBallsError, ValueError):
    pass


class DomainEmpty(ExtBallsError, ValueError):
    pass


class FamilyTooSmall(ExtBallsError, ValueError):
    pass


class DuplicateLabel(ExtBallsError, ValueError):
    pass


class InvariantViolation(ExtBallsError, ValueError):
    pass


class EmptyInput(ExtBallsError, ValueError):
    pass


class UnsupportedQ(ExtBallsError, ValueError):
    pass


class WrongCardinality(ExtBallsError, ValueError):
    pass


class LimitExceeded(ExtBallsError, ValueError):
    pass
