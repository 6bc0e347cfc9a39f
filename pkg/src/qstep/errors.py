"""Exception hierarchy shared by every qstep module."""


class QStepError(Exception):
    """Base class for all errors raised by qstep."""


# special functions

class PoleError(QStepError, ValueError):
    """Argument sits on (or within tolerance of) a pole of Gamma."""


class InvalidC(QStepError, ValueError):
    """Third hypergeometric parameter is zero or a negative integer."""


class NoConvergence(QStepError, ArithmeticError):
    """A series hit its term cap before meeting the tolerance."""


class DegenerateParameters(QStepError, ValueError):
    """a - b is an integer, so the 1/z connection formula is singular."""


class NonFiniteResult(QStepError, ArithmeticError):
    """A computation produced inf or nan."""


class DomainError(QStepError, ValueError):
    """Argument outside the supported domain of a function."""


# physical model

class InvalidPotential(QStepError, ValueError):
    pass


class NonPositiveEnergy(QStepError, ValueError):
    pass


class BelowRegime(QStepError, ValueError):
    """Operation needs a propagating transmitted wave (energy above the step)."""


class DegenerateInput(QStepError, ValueError):
    pass


class SingularWronskian(QStepError, ArithmeticError):
    """Continuity matching denominator vanished."""


class OverflowGuard(QStepError, OverflowError):
    """Position beyond the exact-evaluation window with asymptotics disabled."""


# numerical oracle

class InvalidConfig(QStepError, ValueError):
    pass


class UnstableGrowth(QStepError, ArithmeticError):
    pass


class IllConditioned(QStepError, ArithmeticError):
    pass
