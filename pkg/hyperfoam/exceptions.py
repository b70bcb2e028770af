"""
Domain errors shared by every app.

All of them are ValueErrors so callers that only care about "bad input" can
catch the builtin. Management commands turn them into CommandError.
"""


class HyperfoamError(ValueError):
    """Base class for every error raised by the library."""


class ExactnessError(HyperfoamError):
    """A value left the exact ring it was supposed to stay in (non-unit, non-integer, ...)."""


class LatticeError(HyperfoamError):
    """Bad torus shape, unknown site or non-adjacent input."""


class AssemblyError(HyperfoamError):
    """A super-link stub was missing or used twice while wiring the network."""


class MoveRejected(HyperfoamError):
    """An illegal Pachner move or bit inversion. The network is left untouched."""


class InvariantViolation(HyperfoamError):
    """3-regularity or the leaf direction bijection no longer holds."""


class DecodeError(HyperfoamError):
    """A root cannot be decoded (undefined parity branch, wrong length)."""
