"""Backbones of bounded-length path families, weaving, and lifting.

A backbone is a vertex sequence ``t_0 ... t_k`` from source to sink that a
surviving subfamily traverses in order. :func:`extract_backbone` finds one by
splitting at minimum separators; :func:`weave` builds paths that meet
exactly in a backbone from per-segment families of internally disjoint
paths; :func:`lift` does the same inside the graph minus forbidden material.
"""

from __future__ import annotations

import math
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .connectivity import Separator, kappa_v, min_internal_separator
from .errors import (
    BadParameters,
    BadSegmentFamily,
    EmptyFamily,
    ForbiddenTooLarge,
    InputError,
    NotEdgeDisjoint,
    SegmentBlocked,
    SoundnessBreach,
)
from .graph import MultiGraph, OrientedPath, PathSystem


@dataclass(frozen=True)
class Backbone:
    vertices: tuple[int, ...]
    floors: tuple[int, ...]
    survivors: PathSystem
    survivor_indices: tuple[int, ...]
    separators_used: tuple[Separator, ...]
    family_size: int

    @property
    def pigeonhole_bound(self) -> int:
        """Lower bound on survivors implied by the recorded separators."""
        return math.ceil(self.family_size / math.prod(len(s) for s in self.separators_used))

    def to_line(self) -> str:
        return "backbone " + " ".join(map(str, self.vertices)) + " ; floors " + " ".join(map(str, self.floors))


def extract_backbone(g: MultiGraph, family: PathSystem, tau: int) -> Backbone:
    """Recover a backbone from an edge-disjoint family of source-sink paths.

    A segment ``x..y`` is final when ``x`` and ``y`` are adjacent or
    ``kappa_v(x, y) >= tau``. Otherwise a minimum internal separator is
    taken, the separator vertex lying on the most surviving paths is kept
    (ties: lowest index), and prefix and suffix are handled recursively.
    """
    if tau < 1:
        raise BadParameters("tau must be positive")
    if not family.paths:
        raise EmptyFamily("backbone extraction needs at least one path")
    seqs = family.vertex_seqs
    owner: dict[int, int] = {}
    for i, p in enumerate(family.paths):
        for e in p.edges:
            if owner.setdefault(e, i) != i:
                raise NotEdgeDisjoint(f"edge {e} is used by paths {owner[e]} and {i}")

    kv_cache: dict[tuple[int, int], int] = {}

    def kv(x: int, y: int) -> int:
        if (x, y) not in kv_cache:
            kv_cache[(x, y)] = kappa_v(g, x, y)[0]
        return kv_cache[(x, y)]

    separators: list[Separator] = []

    def split(x: int, y: int, items: list[tuple[int, Sequence[int]]]):
        if g.adjacent(x, y) or kv(x, y) >= tau:
            return [x, y], [i for i, _ in items], [kv(x, y)]
        sep = min_internal_separator(g, x, y)
        separators.append(sep)
        hits = {s: sum(1 for _, seq in items if s in seq) for s in sep.vertices}
        s = min(hits, key=lambda v: (-hits[v], v))
        chosen = [(i, seq) for i, seq in items if s in seq]
        if not chosen:
            raise SoundnessBreach(f"separator {sorted(sep.vertices)} misses every path")
        prefix = [(i, seq[: seq.index(s) + 1]) for i, seq in chosen]
        q1, surv1, floors1 = split(x, s, prefix)
        keep = set(surv1)
        suffix = [(i, seq[seq.index(s):]) for i, seq in chosen if i in keep]
        q2, surv2, floors2 = split(s, y, suffix)
        return q1 + q2[1:], surv2, floors1 + floors2

    verts, surv, floors = split(family.source, family.sink, list(enumerate(seqs)))
    surv = sorted(surv)
    return Backbone(
        vertices=tuple(verts),
        floors=tuple(floors),
        survivors=family.select(surv),
        survivor_indices=tuple(surv),
        separators_used=tuple(separators),
        family_size=len(family),
    )


def _check_segment_family(fam: PathSystem, x: int, y: int, i: int) -> tuple[tuple[int, ...], ...]:
    if (fam.source, fam.sink) != (x, y):
        raise BadSegmentFamily(f"family {i} runs {fam.source}->{fam.sink}, segment is {x}->{y}")
    try:
        seqs = fam.vertex_seqs
    except InputError as exc:
        raise BadSegmentFamily(f"family {i}: {exc}") from None
    seen_v: set[int] = set()
    seen_e: set[int] = set()
    for p, seq in zip(fam.paths, seqs):
        interior = set(seq[1:-1])
        if interior & seen_v or seen_e.intersection(p.edges):
            raise BadSegmentFamily(f"family {i} is not internally disjoint")
        seen_v |= interior
        seen_e.update(p.edges)
    return seqs


def weave(g: MultiGraph, bb_vertices: Sequence[int], segment_families: Sequence[PathSystem],
          r: int) -> PathSystem:
    """Greedily assemble up to ``r`` paths through the backbone.

    Each round takes, per segment, the first unused family member whose
    interior avoids the backbone, all earlier rounds, and the earlier segments
    of this round. Stops after ``r`` paths or at the first segment with no
    usable member. Any two output paths meet exactly in the backbone.
    """
    bb = tuple(bb_vertices)
    if len(bb) < 2 or len(set(bb)) != len(bb):
        raise BadParameters("backbone needs at least two distinct vertices")
    if len(segment_families) != len(bb) - 1:
        raise BadSegmentFamily(f"{len(bb) - 1} segments but {len(segment_families)} families")
    if r < 1:
        raise BadParameters("r must be positive")
    seqs = [_check_segment_family(f, bb[i], bb[i + 1], i) for i, f in enumerate(segment_families)]

    backbone = set(bb)
    blocked: set[int] = set()
    used = [set() for _ in seqs]
    out: list[OrientedPath] = []
    while len(out) < r:
        round_vertices: set[int] = set()
        picks = []
        for i, fam_seqs in enumerate(seqs):
            for j, seq in enumerate(fam_seqs):
                if j in used[i]:
                    continue
                interior = seq[1:-1]
                if any(v in backbone or v in blocked or v in round_vertices for v in interior):
                    continue
                picks.append(j)
                round_vertices.update(interior)
                break
            else:
                return PathSystem(g, bb[0], bb[-1], tuple(out))
        edges: list[int] = []
        for i, j in enumerate(picks):
            used[i].add(j)
            edges += segment_families[i].paths[j].edges
        blocked |= round_vertices
        out.append(OrientedPath(bb[0], tuple(edges)))
    return PathSystem(g, bb[0], bb[-1], tuple(out))


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Simple graph joining ``x, y`` whenever ``kappa_v(x, y) >= threshold`` in ``host``."""

    threshold: int
    host: MultiGraph
    edges: frozenset[tuple[int, int]]

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self.edges

    def is_walk(self, w: Sequence[int]) -> bool:
        return all(self.has_edge(x, y) for x, y in zip(w, w[1:]))


def auxiliary_graph(g: MultiGraph, theta: int, restrict: Iterable[int] | None = None) -> AuxiliaryGraph:
    if theta < 1:
        raise BadParameters("theta must be positive")
    verts = sorted(set(g.vertices() if restrict is None else restrict))
    edges = frozenset((x, y) for x, y in combinations(verts, 2) if kappa_v(g, x, y)[0] >= theta)
    return AuxiliaryGraph(theta, g, edges)


def lift(g: MultiGraph, w: Sequence[int], forbidden_vertices: Collection[int],
         forbidden_edges: Collection[int], r: int, theta: int) -> PathSystem:
    """Realise the vertex sequence ``w`` by up to ``r`` compatible paths in
    ``g`` minus the forbidden material.

    Consecutive entries of ``w`` must have ``kappa_v >= theta`` in ``g`` and
    fewer than ``theta`` vertices may be forbidden. Segment families are
    recomputed in the reduced graph (also avoiding the other entries of
    ``w``) and handed to :func:`weave`.
    """
    w = tuple(w)
    fv, fe = frozenset(forbidden_vertices), frozenset(forbidden_edges)
    if len(fv) >= theta:
        raise ForbiddenTooLarge(f"{len(fv)} forbidden vertices, threshold is {theta}")
    if len(w) < 2 or len(set(w)) != len(w):
        raise BadParameters("w must list at least two distinct vertices")
    if fv & set(w):
        raise BadParameters(f"forbidden vertices {sorted(fv & set(w))} lie on w")
    families = []
    for x, y in zip(w, w[1:]):
        if kappa_v(g, x, y)[0] < theta:
            raise BadParameters(f"kappa_v({x}, {y}) is below {theta}")
        others = set(w) - {x, y}
        value, fam = kappa_v(g, x, y, avoid_vertices=fv | others, avoid_edges=fe)
        if value == 0:
            raise SegmentBlocked((x, y))
        families.append(fam)
    return weave(g, w, families, r)
