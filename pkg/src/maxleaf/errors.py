"""Exception hierarchy shared by every module of the package."""


class MaxLeafError(Exception):
    """Base class for all contract violations raised by this package."""


# graph-core
class NotSpanningTree(MaxLeafError, ValueError):
    pass


class Disconnected(MaxLeafError, ValueError):
    pass


class InvalidGraph(MaxLeafError, ValueError):
    pass


class InvalidOrientation(MaxLeafError, ValueError):
    pass


# coloring
class IsK4(MaxLeafError, ValueError):
    pass


class NotCubic(MaxLeafError, ValueError):
    pass


class Improper(MaxLeafError, ValueError):
    pass


# gadgets
class CertificationFailed(MaxLeafError):
    """A certified property failed; ``witness`` holds the counterexample."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoPatternExists(MaxLeafError):
    pass


# instance builder
class BadColoring(MaxLeafError, ValueError):
    pass


class NotIncident(MaxLeafError, ValueError):
    pass


class DegreeOutOfRange(MaxLeafError, ValueError):
    pass


# forward map
class NotIndependent(MaxLeafError, ValueError):
    pass


class NotMaximal(MaxLeafError, ValueError):
    pass


class InconsistentOrientation(MaxLeafError, ValueError):
    pass


class InternalInvariantViolation(MaxLeafError):
    pass


# backward map
class NoNonLeafConnection(MaxLeafError):
    pass


class MalformedOutTree(MaxLeafError, ValueError):
    pass


class AuditFailed(MaxLeafError):
    """Raised with the name of the violated claim in ``claim``."""

    def __init__(self, claim, message):
        super().__init__(f"{claim}: {message}")
        self.claim = claim


# oracles
class BudgetExceeded(MaxLeafError):
    pass


# companion reductions
class IsK2(MaxLeafError, ValueError):
    pass


class NotCDS(MaxLeafError, ValueError):
    pass


class EpsilonOutOfRange(MaxLeafError, ValueError):
    pass


class ProviderContractViolated(MaxLeafError):
    pass


# cli / generators
class UnsatisfiableParameters(MaxLeafError, ValueError):
    pass


class GraphFormatError(MaxLeafError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
