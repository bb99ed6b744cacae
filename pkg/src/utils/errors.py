"""Exception hierarchy shared by every module.

Each class carries the process exit code the command-line surface maps it to:
2 for usage/parse problems, 3 for data invariant violations and 4 for
internal numerical failures.
"""


class FrameEnergyError(Exception):
    """Base class for all errors raised by this package."""
    exit_code = 3


# Linear algebra
class NotSymmetricError(FrameEnergyError, ValueError):
    pass

class NoConvergenceError(FrameEnergyError, ArithmeticError):
    exit_code = 4

class EmptyKernelError(FrameEnergyError, ValueError):
    pass

class NotPositiveDefiniteError(FrameEnergyError, ValueError):
    pass


# Configurations & input
class InvalidConfigurationError(FrameEnergyError, ValueError):
    pass

class VectorFileError(FrameEnergyError, ValueError):
    exit_code = 2

class ConstructorSpecError(FrameEnergyError, ValueError):
    exit_code = 2

class UnknownEtfError(FrameEnergyError, ValueError):
    pass

class DimensionMismatchError(FrameEnergyError, ValueError):
    pass


# Potentials & energies
class DomainError(FrameEnergyError, ValueError):
    pass

class NonSmoothPointError(FrameEnergyError, ValueError):
    pass


# Bounds
class InfeasibleCError(FrameEnergyError, ValueError):
    pass

class TooLargeError(FrameEnergyError, ValueError):
    pass

class NotApplicableError(FrameEnergyError, ValueError):
    pass

class BadExponentError(FrameEnergyError, ValueError):
    pass

class MismatchedDualError(FrameEnergyError, ValueError):
    pass


# Gale dual
class RankMismatchError(FrameEnergyError, ValueError):
    pass

class DegenerateError(FrameEnergyError, ValueError):
    pass


# Continuous energies
class UnsupportedDegreeError(FrameEnergyError, ValueError):
    pass

class NotCertifiableError(FrameEnergyError, ValueError):
    pass
