"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CliqueCoverError(Exception):
    """Base class for all library errors."""


class InvalidInput(CliqueCoverError):
    """A graph, parameter set or vertex set is malformed.

    ``clause`` carries the identifier of the violated defining condition
    when one applies, e.g. ``"(P1)"`` or ``"(T4)"``.
    """

    def __init__(self, message: str, clause: str | None = None):
        if clause and clause not in message:
            message = f"{clause} {message}"
        super().__init__(message)
        self.clause = clause


class HostMismatch(CliqueCoverError):
    """A cover was checked against a graph it was not built for."""


class NotACliqueError(CliqueCoverError):
    """A set that must be a clique is not."""


class CapExceeded(CliqueCoverError):
    """An exact routine was asked to solve an instance above its size cap."""


class BudgetExhausted(CliqueCoverError):
    """The exact solver ran out of its node budget before proving optimality."""


class NoTriad(CliqueCoverError):
    """The construction needs a triad and the graph has none."""


class NotAntiprismatic(CliqueCoverError):
    """The construction needs an antiprismatic graph."""


class TripodInput(CliqueCoverError):
    """A path of triangles graph that is a tripod has no splitting cover of size n-1."""


class PreconditionError(CliqueCoverError):
    """A documented precondition of a construction does not hold."""


class BoundViolation(CliqueCoverError):
    """A construction emitted a cover above its claimed bound (a bug, never expected)."""


class CoverFailure(CliqueCoverError):
    """A construction produced a collection that does not verify (a bug, never expected)."""

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict
