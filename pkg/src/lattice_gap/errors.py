"""Exception types shared across the package."""


class LatticeGapError(Exception):
    """Base class for every error raised by this package."""


class InvalidTriple(LatticeGapError):
    """A triple (n, s, t) fails the domain constraints."""


class NotInvertible(LatticeGapError):
    """A modular inverse was requested for a non-unit."""


class PreconditionViolated(LatticeGapError):
    """An operation was called outside its stated domain."""


class NoWitness(LatticeGapError):
    """A search that is guaranteed to succeed came up empty."""


class RangeError(LatticeGapError):
    """An argument lies outside the supported range."""


class ResourceLimit(LatticeGapError):
    """A computation would exceed a configured size cap."""


class CheckpointMismatch(LatticeGapError):
    """A checkpoint file does not belong to the requested run."""
