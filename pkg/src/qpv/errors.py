"""Exception hierarchy shared by the engine and the CLI."""


class QPVError(Exception):
    """Base class for all engine errors."""


class InversionError(QPVError, ArithmeticError):
    """Series inversion needs a lowest coefficient of +1 or -1."""


class InexactDivisionError(QPVError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class DivergentProductError(QPVError, ValueError):
    pass


class DomainError(QPVError, ValueError):
    pass


class TruncationError(QPVError, ValueError):
    """A coefficient beyond the truncation order was requested or needed."""


class MoveError(QPVError, ValueError):
    pass


class MembershipError(QPVError, ValueError):
    pass


class DivergenceError(QPVError, ValueError):
    pass


class PoleError(QPVError, ZeroDivisionError):
    pass


class ParseError(QPVError, ValueError):
    pass


class UsageError(QPVError):
    """Bad command-line usage; the CLI maps it to exit status 2."""
