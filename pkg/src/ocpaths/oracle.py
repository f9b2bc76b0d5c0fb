"""Exhaustive reference answers for tiny graphs.

Everything here enumerates simple paths explicitly and searches over subsets
of them; no flow code is involved, so these serve as independent checks.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .errors import LimitExceeded, SameEndpoints
from .graph import MultiGraph, OrientedPath, PathSystem
from .order import find_inversion


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 7
    max_edges: int = 12
    max_paths_enumerated: int = 10_000

    def check(self, g: MultiGraph) -> None:
        if g.vertex_count > self.max_vertices or g.edge_count > self.max_edges:
            raise LimitExceeded(
                f"graph has {g.vertex_count} vertices / {g.edge_count} edges, "
                f"limits are {self.max_vertices} / {self.max_edges}"
            )

    @classmethod
    def parse(cls, text: str) -> OracleLimits:
        n, m, p = (int(x) for x in text.split(","))
        return cls(n, m, p)


DEFAULT_LIMITS = OracleLimits()


def enumerate_paths(g: MultiGraph, a: int, b: int, limits: OracleLimits = DEFAULT_LIMITS) -> list[OrientedPath]:
    """All simple a-b paths in lexicographic order of their edge-id sequences."""
    if a == b:
        raise SameEndpoints(f"a and b are both {a}")
    limits.check(g)
    found: list[OrientedPath] = []
    edges: list[int] = []
    on_path = {a}

    def extend(v: int) -> None:
        for e in g.incidence[v]:
            w = g.other(e, v)
            if w in on_path:
                continue
            edges.append(e)
            if w == b:
                found.append(OrientedPath(a, tuple(edges)))
                if len(found) > limits.max_paths_enumerated:
                    raise LimitExceeded(f"more than {limits.max_paths_enumerated} paths")
            else:
                on_path.add(w)
                extend(w)
                on_path.discard(w)
            edges.pop()

    extend(a)
    return found


def _max_family(paths: list[OrientedPath], a_edges: list[int],
                compatible: Callable[[int, int], bool] | None = None) -> list[int]:
    """Largest set of pairwise compatible paths, as indices into ``paths``.

    Paths sharing an edge are never compatible; ``compatible`` adds a further
    pairwise condition. Every a-b path leaves ``a`` through exactly one edge,
    so the search branches on the edges at ``a``: each picks one path or none.
    """
    by_first: dict[int, list[int]] = {e: [] for e in a_edges}
    masks = []
    for i, p in enumerate(paths):
        by_first[p.edges[0]].append(i)
        mask = 0
        for e in p.edges:
            mask |= 1 << e
        masks.append(mask)
    groups = [by_first[e] for e in a_edges if by_first[e]]
    memo: dict[tuple[int, int], bool] = {}

    def ok(i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        if key not in memo:
            memo[key] = compatible is None or compatible(*key)
        return memo[key]

    best: list[int] = []
    chosen: list[int] = []

    def search(gi: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if len(chosen) + len(groups) - gi <= len(best):
            return
        for i in groups[gi]:
            if masks[i] & used or not all(ok(i, j) for j in chosen):
                continue
            chosen.append(i)
            search(gi + 1, used | masks[i])
            chosen.pop()
        search(gi + 1, used)

    if groups:
        search(0, 0)
    return best


def brute_kappa_E(g: MultiGraph, a: int, b: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    paths = enumerate_paths(g, a, b, limits)
    return len(_max_family(paths, list(g.incidence[a])))


def brute_max_oc(g: MultiGraph, a: int, b: int,
                 limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, PathSystem]:
    """Largest edge-disjoint, pairwise order-compatible family, with witness."""
    paths = enumerate_paths(g, a, b, limits)
    seqs = [p.vertices(g) for p in paths]
    idx = _max_family(paths, list(g.incidence[a]),
                      lambda i, j: find_inversion(seqs[i], seqs[j]) is None)
    return len(idx), PathSystem(g, a, b, tuple(paths[i] for i in sorted(idx)))


def brute_kappa_V(g: MultiGraph, a: int, b: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Largest family of internally vertex-disjoint a-b paths (test helper)."""
    paths = enumerate_paths(g, a, b, limits)
    inner = [frozenset(p.vertices(g)[1:-1]) for p in paths]
    return len(_max_family(paths, list(g.incidence[a]), lambda i, j: not inner[i] & inner[j]))
