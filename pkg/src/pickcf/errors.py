"""Exception hierarchy shared by every module."""


class PickCFError(Exception):
    """Base class for all errors raised by :mod:`pickcf`."""


class DataTooShort(PickCFError, ValueError):
    pass


class PivotZero(PickCFError, ZeroDivisionError):
    pass


class NotAttainable(PickCFError, ValueError):
    """The off-corner column is outside the range of the leading block."""


class RankStructureBroken(PickCFError, ValueError):
    pass


class NotInvertible(PickCFError, ZeroDivisionError):
    pass


class NotReducible(PickCFError, ValueError):
    pass


class OrderTooLow(PickCFError, ValueError):
    pass


class InvalidDerivative(PickCFError, ValueError):
    pass


class NearPole(PickCFError, ArithmeticError):
    pass


class PoleAtCenter(PickCFError, ValueError):
    pass


class HigherOrderPole(PickCFError, ValueError):
    pass


class PoleAtNode(PickCFError, ValueError):
    pass


class WrongParity(PickCFError, ValueError):
    pass


class Unsolvable(PickCFError, ValueError):
    pass


class EvaluationFailed(PickCFError, ArithmeticError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class InvalidParameter(PickCFError, ValueError):
    pass
