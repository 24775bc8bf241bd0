"""Exception hierarchy shared by all modules."""


class EKError(Exception):
    """Base class for all errors raised by euclidkemeny."""


class InputError(EKError, ValueError):
    """Malformed or inconsistent input (length mismatch, bad ids, ...)."""


class ParityError(EKError):
    """Tournament weights do not have the parity a construction needs."""


class BipartitionError(EKError):
    """An arc lies inside one side of the supplied bipartition."""


class TieError(EKError):
    """A voter is equidistant from two distinct candidates."""

    def __init__(self, voter, pair):
        self.voter = voter
        self.pair = tuple(pair)
        super().__init__(f"voter {voter!r} is equidistant from candidates {self.pair[0]} and {self.pair[1]}")


class EmptyProfile(EKError):
    """An embedding or construction produced no voters."""


class CapacityError(EKError):
    """Instance size exceeds the guard of an exact solver."""


class VerificationError(EKError):
    """An end-to-end check disagreed with its independent oracle."""
