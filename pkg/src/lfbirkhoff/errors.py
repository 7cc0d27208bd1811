"""Exception hierarchy shared by every module of the package."""


class LatticeError(Exception):
    """Base class for all errors raised by lfbirkhoff."""


class CycleDetected(LatticeError):
    pass


class SizeLimitExceeded(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair, kind="meet"):
        self.pair = tuple(pair)
        self.kind = kind
        super().__init__(f"no unique {kind} for pair {self.pair}")


class NotDistributive(LatticeError):
    def __init__(self, msg="lattice is not distributive", witness=None):
        self.witness = witness
        super().__init__(msg if witness is None else f"{msg}: witness {witness}")


class NotSeparable(LatticeError):
    pass


class NotAFilter(LatticeError):
    pass


class NotPrime(LatticeError):
    pass


class AlreadyMember(LatticeError):
    pass


class NotACovering(LatticeError):
    pass


class NotComparable(LatticeError):
    pass


class WindowTooLarge(SizeLimitExceeded):
    pass


class UnsupportedLattice(LatticeError):
    pass


class IncomparableBases(LatticeError):
    pass


class NotAnIdeal(LatticeError):
    pass


class HypothesisFailed(LatticeError):
    pass


class InvariantViolation(LatticeError):
    """A structural identity that must hold by construction did not.

    Raised instead of silently repairing data; seeing one means either a
    corrupted input table or a bug.
    """
