"""Exception hierarchy.

Every error raised by the package derives from :class:`OCPathsError`. The
CLI maps the three families below onto its exit codes:

* input problems (malformed files, invalid paths, bad arguments) -> 2
* infeasible requests and exceeded limits -> 3
* failed verification / broken guarantees -> 1
"""

from __future__ import annotations


class OCPathsError(Exception):
    pass


# -- input problems ---------------------------------------------------------


class InputError(OCPathsError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class RangeError(ParseError):
    pass


class DuplicateEdgeId(ParseError):
    pass


class InvalidPath(InputError):
    pass


class UnknownEdge(InvalidPath):
    pass


class NotIncident(InvalidPath):
    pass


class RepeatedVertex(InvalidPath):
    pass


class SameEndpoints(InputError):
    pass


class AdjacentEndpoints(InputError):
    pass


class MixedEndpoints(InputError):
    pass


class EndpointMismatch(InputError):
    pass


class EmptyFamily(InputError):
    pass


class NotEdgeDisjoint(InputError):
    pass


class UnverifiedSystem(InputError):
    """An input system is not edge-disjoint and pairwise order-compatible."""


class BadSegmentFamily(InputError):
    pass


class BadParameters(InputError):
    pass


class NotATerminal(InputError):
    pass


class TerminalExists(InputError):
    """The Q-paths all leave the P-union at one vertex; use the terminal route."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"all Q-paths exit the P-union at vertex {vertex}")


class HypothesisViolated(InputError):
    """A precondition of :func:`ocpaths.order.concatenate_pair` failed.

    ``condition`` is one of :data:`ocpaths.order.CONCAT_CONDITIONS`.
    """

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


# -- infeasible / limits ----------------------------------------------------


class InfeasibleError(OCPathsError):
    pass


class Infeasible(InfeasibleError):
    pass


class LimitExceeded(InfeasibleError):
    pass


class ForbiddenTooLarge(InfeasibleError):
    pass


class SegmentBlocked(InfeasibleError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"no route left between {pair[0]} and {pair[1]}")


class NoTerminalAtLevel(InfeasibleError):
    def __init__(self, level: int, partial):
        self.level = level
        self.partial = partial
        super().__init__(f"no qualifying terminal at level {level}")


class LevelExhausted(InfeasibleError):
    def __init__(self, k: int, partial):
        self.k = k
        self.partial = partial
        super().__init__(f"no fresh Q-path left for level selection {k}")


class NothingFound(InfeasibleError):
    pass


# -- broken guarantees ------------------------------------------------------


class SoundnessBreach(OCPathsError, AssertionError):
    """A construction produced output that fails its own re-verification."""


class MinimalityBreach(SoundnessBreach):
    pass
