"""Seeded instance generators.

All generators draw from ``random.Random(seed)`` (Mersenne Twister) and
nothing else, so output is a pure function of the arguments. Planted
instances re-verify their metadata against the emitted graph before they
are returned.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field

from .backbone import extract_backbone
from .compose import build_cascade, exit_vertices, find_terminals
from .connectivity import kappa_v
from .errors import BadParameters, SoundnessBreach
from .graph import MultiGraph, OrientedPath, PathSystem, format_graph, format_system
from .order import verify_system

SCENARIOS = ("terminal_rich", "terminal_free", "cascade")
CONCAT_VIOLATIONS = (
    "prefix-pair",
    "suffix-pair",
    "intersection-at-u",
    "intersection-at-v",
    "cross-u",
    "cross-v",
)


@dataclass(frozen=True)
class PlantedInstance:
    graph: MultiGraph
    roles: dict[str, int]
    planted: dict[str, object]
    systems: dict[str, PathSystem] = field(default_factory=dict)

    def meta_lines(self) -> list[str]:
        out = [f"meta {k} {v}" for k, v in self.roles.items()]
        for k, v in self.planted.items():
            if isinstance(v, (list, tuple, frozenset, set)):
                v = " ".join(map(str, sorted(v) if isinstance(v, (set, frozenset)) else v))
            out.append(f"meta {k} {v}")
        return out

    def emit(self) -> tuple[str, str, dict[str, str]]:
        """Graph file, metadata sidecar and one system file per named system."""
        systems = {name: format_system(s) for name, s in self.systems.items()}
        return format_graph(self.graph), "\n".join(self.meta_lines()) + "\n", systems


class _Builder:
    """Allocates vertices and records one fresh edge per consecutive pair."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def vertices(self, k: int) -> list[int]:
        return [self.vertex() for _ in range(k)]

    def walk(self, seq: Sequence[int]) -> list[int]:
        ids = []
        for u, v in zip(seq, seq[1:]):
            ids.append(len(self.edges))
            self.edges.append((u, v))
        return ids

    def chain(self, stops: Sequence[int], rng: random.Random, max_private: int,
              min_private: int = 0) -> list[int]:
        """Vertex sequence through ``stops`` with fresh vertices between them."""
        seq = [stops[0]]
        for s in stops[1:]:
            seq += self.vertices(rng.randint(min_private, max_private))
            seq.append(s)
        return seq

    def finish(self, rng: random.Random | None, paths: dict[str, list[list[int]]],
               starts: dict[str, list[int]]) -> tuple[MultiGraph, dict[str, list[OrientedPath]], list[int]]:
        """Build the graph, optionally relabelling vertices and edge ids."""
        vperm = list(range(self.n))
        eperm = list(range(len(self.edges)))
        if rng is not None:
            rng.shuffle(vperm)
            rng.shuffle(eperm)
        edges: list[tuple[int, int]] = [(0, 0)] * len(self.edges)
        for old, (u, v) in enumerate(self.edges):
            edges[eperm[old]] = (vperm[u], vperm[v])
        g = MultiGraph(self.n, tuple(edges))
        out = {
            name: [OrientedPath(vperm[s], tuple(eperm[e] for e in ids)) for s, ids in zip(starts[name], lists)]
            for name, lists in paths.items()
        }
        return g, out, vperm


# -- random multigraphs -------------------------------------------------------


def gen_random_multigraph(n: int, m: int, max_multiplicity: int, seed: int) -> MultiGraph:
    """``m`` edges placed uniformly among vertex pairs with spare multiplicity."""
    if n < 2 or m < 0 or max_multiplicity < 1:
        raise BadParameters("need n >= 2, m >= 0, max_multiplicity >= 1")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if m > len(pairs) * max_multiplicity:
        raise BadParameters(f"{m} edges exceed capacity {len(pairs) * max_multiplicity}")
    rng = random.Random(seed)
    slots = [p for p in pairs for _ in range(max_multiplicity)]
    return MultiGraph(n, tuple(rng.sample(slots, m)))


# -- planted backbones --------------------------------------------------------


def gen_planted_backbone(segments: int, width: int, seg_length: int, seed: int) -> PlantedInstance:
    """Chain ``t_0 .. t_segments`` with ``width`` internally disjoint paths of
    ``seg_length`` edges between consecutive entries.

    System ``family`` holds ``width`` edge-disjoint t_0-t_k paths, the i-th
    one using the i-th route of every segment.
    """
    if segments < 1 or width < 1 or seg_length < 1:
        raise BadParameters("segments, width and seg_length must be positive")
    rng = random.Random(seed)
    b = _Builder()
    ts = b.vertices(segments + 1)
    routes = [[b.walk([t, *b.vertices(seg_length - 1), u]) for _ in range(width)] for t, u in zip(ts, ts[1:])]
    fam = [[e for seg in routes for e in seg[i]] for i in range(width)]
    g, paths, vperm = b.finish(rng, {"family": fam}, {"family": [ts[0]] * width})
    bb = [vperm[t] for t in ts]
    inst = PlantedInstance(
        g,
        {"a": bb[0], "b": bb[-1]},
        {"kind": "backbone", "backbone": bb, "width": width, "segments": segments,
         "seg_length": seg_length, "planted_count": width},
        {"family": PathSystem(g, bb[0], bb[-1], tuple(paths["family"]))},
    )
    verify_planted(inst)
    return inst


def gen_weave_config(segments: int, r: int, seg_length: int, seed: int,
                     slack: int = 0) -> PlantedInstance:
    """Backbone plus one segment family per segment, sized past the weave
    sufficiency bound ``r * segments * seg_length``.

    Family members have between 1 and ``seg_length`` edges; within a segment
    they are internally disjoint, across segments they draw interiors from a
    shared vertex pool, so greedy rounds genuinely compete for vertices.
    Systems are named ``seg0``, ``seg1``, ...
    """
    if segments < 1 or r < 1 or seg_length < 1 or slack < 0:
        raise BadParameters("segments, r, seg_length must be positive and slack nonnegative")
    rng = random.Random(seed)
    width = r * segments * seg_length + 1 + slack
    b = _Builder()
    ts = b.vertices(segments + 1)
    pool = b.vertices(width * (seg_length - 1))
    fams, starts = {}, {}
    for i, (t, u) in enumerate(zip(ts, ts[1:])):
        free = pool.copy()
        rng.shuffle(free)
        members = []
        for _ in range(width):
            inner = [free.pop() for _ in range(rng.randint(0, seg_length - 1))]
            members.append(b.walk([t, *inner, u]))
        fams[f"seg{i}"] = members
        starts[f"seg{i}"] = [t] * width
    g, paths, vperm = b.finish(rng, fams, starts)
    bb = [vperm[t] for t in ts]
    systems = {name: PathSystem(g, bb[i], bb[i + 1], tuple(paths[name])) for i, name in enumerate(fams)}
    return PlantedInstance(
        g,
        {"a": bb[0], "b": bb[-1]},
        {"kind": "weave", "backbone": bb, "width": width, "r": r, "segments": segments,
         "seg_length": seg_length, "planted_count": r},
        systems,
    )


def gen_lift_instance(segments: int, width: int, seg_length: int, seed: int,
                      noise: int = 0) -> PlantedInstance:
    """Planted backbone with threshold ``theta = width``, ``noise`` random
    extra edges, and forbidden material with fewer than ``theta`` items in
    total (so every segment keeps at least one route).
    """
    if width < 2:
        raise BadParameters("lift instances need width >= 2")
    base = gen_planted_backbone(segments, width, seg_length, seed)
    rng = random.Random(seed + 1)
    g0 = base.graph
    edges = list(g0.edges)
    for _ in range(noise):
        u, v = rng.sample(range(g0.vertex_count), 2)
        edges.append((u, v))
    g = MultiGraph(g0.vertex_count, tuple(edges))
    bb = list(base.planted["backbone"])
    budget = rng.randint(0, width - 1)
    nv = rng.randint(0, budget)
    candidates = [v for v in g.vertices() if v not in bb]
    fv = sorted(rng.sample(candidates, min(nv, len(candidates))))
    fe = sorted(rng.sample(range(g.edge_count), budget - len(fv)))
    return PlantedInstance(
        g,
        dict(base.roles),
        {"kind": "lift", "backbone": bb, "theta": width, "r": rng.randint(1, width),
         "forbidden_vertices": fv, "forbidden_edges": fe, "planted_count": 1},
    )


# -- concatenation quadruples -------------------------------------------------


@dataclass(frozen=True)
class Quadruple:
    graph: MultiGraph
    a_p_u: OrientedPath
    a_p2_v: OrientedPath
    u_q_c: OrientedPath
    v_q2_c: OrientedPath
    violated: str | None

    @property
    def legs(self) -> tuple[OrientedPath, OrientedPath, OrientedPath, OrientedPath]:
        return self.a_p_u, self.a_p2_v, self.u_q_c, self.v_q2_c


def gen_concat_quadruple(seed: int, violate: str | None = None) -> Quadruple:
    """Legs ``aPu, aP'v, uQc, vQ'c`` meeting the concatenation preconditions,
    or breaking exactly the one named in ``violate``.

    The prefixes share hubs in a common order, as do the suffixes. Either
    ``u = v``, or ``u != v`` with possibly ``u`` placed on ``Q'`` or ``v`` on
    ``Q`` (never both, which would create an inversion).
    """
    if violate is not None and violate not in CONCAT_VIOLATIONS:
        raise BadParameters(f"unknown violation {violate!r}")
    rng = random.Random(seed)
    b = _Builder()
    a, c = b.vertex(), b.vertex()
    h1 = b.vertices(rng.randint(2 if violate == "prefix-pair" else 0, 3))
    h2 = b.vertices(rng.randint(2 if violate == "suffix-pair" else 0, 3))
    mode = rng.choice(("same", "plain", "u-on-q2", "v-on-q"))
    u = b.vertex()
    v = u if mode == "same" else b.vertex()
    hi = 2
    # suffix forcing at least one private vertex where a violation needs a target
    need_q = violate in ("intersection-at-u", "cross-v")
    need_q2 = violate in ("intersection-at-v", "cross-u")
    q_stops = [u, *([v] if mode == "v-on-q" else []), *h2, c]
    q2_stops = [v, *([u] if mode == "u-on-q2" else []), *(h2[::-1] if violate == "suffix-pair" else h2), c]
    q = b.chain(q_stops, rng, hi, 1 if need_q else 0)
    q2 = b.chain(q2_stops, rng, hi, 1 if need_q2 else 0)
    p = b.chain([a, *h1, u], rng, hi)
    p2 = b.chain([a, *(h1[::-1] if violate == "prefix-pair" else h1), v], rng, hi)

    def private(seq: list[int], other: list[int]) -> int:
        return rng.choice([x for x in seq[1:-1] if x not in other and x not in (u, v)])

    def insert(seq: list[int], x: int) -> None:
        seq.insert(rng.randint(1, len(seq) - 1), x)

    if violate == "intersection-at-u":
        insert(p, private(q, q2))
    elif violate == "intersection-at-v":
        insert(p2, private(q2, q))
    elif violate == "cross-u":
        insert(p, private(q2, q))
    elif violate == "cross-v":
        insert(p2, private(q, q2))

    seqs = {"p": [p], "p2": [p2], "q": [q], "q2": [q2]}
    ids = {k: [b.walk(s[0])] for k, s in seqs.items()}
    starts = {"p": [a], "p2": [a], "q": [u], "q2": [v]}
    g, paths, _ = b.finish(rng, ids, starts)
    return Quadruple(g, paths["p"][0], paths["p2"][0], paths["q"][0], paths["q2"][0], violate)


# -- compose scenarios --------------------------------------------------------


def gen_compose_scenario(kind: str, size: int, depth: int = 1, seed: int = 0) -> PlantedInstance:
    """Systems ``P`` (a to b) and ``Q`` (b to c) shaped for one strategy.

    * ``terminal_rich``: ``size`` internally disjoint paths on each side,
      meeting only at b, which is then a terminal hit by every P-path.
    * ``terminal_free``: P-path ``i`` carries ``v_i``; Q-path ``i`` leaves
      b, may touch P-path ``i`` after ``v_i``, and exits the P-union at
      ``v_i``, so the exit vertices are pairwise distinct.
    * ``cascade``: ``size`` Q-paths all running ``b, w_{d-1}, ..., w_0, c``
      with private segments; P-path ``k`` enters the segments at ``u_k``
      (inside level ``k+1`` or at ``w_k``) and then visits ``w_k``.
    """
    if kind not in SCENARIOS:
        raise BadParameters(f"unknown scenario {kind!r}")
    if size < 1 or depth < 1:
        raise BadParameters("size and depth must be positive")
    rng = random.Random(seed)
    b = _Builder()
    a, mid, c = b.vertex(), b.vertex(), b.vertex()
    P: list[list[int]] = []
    Q: list[list[int]] = []
    planted: dict[str, object] = {"kind": kind, "size": size}

    if kind == "terminal_rich":
        P = [b.chain([a, mid], rng, 2) for _ in range(size)]
        Q = [b.chain([mid, c], rng, 2) for _ in range(size)]
        planted |= {"terminal": mid, "planted_count": size}
    elif kind == "terminal_free":
        carriers = b.vertices(size)
        for v in carriers:
            tail = b.vertices(rng.randint(0, 2))
            P.append(b.chain([a, v], rng, 2) + tail + [mid])
            stops = [mid, *([rng.choice(tail)] if tail and rng.random() < 0.5 else []), v, c]
            Q.append(b.chain(stops, rng, 2, 1))
        planted |= {"exits": carriers, "planted_count": size}
    else:
        ws = b.vertices(depth)  # ws[n] is w_n
        # level n segment of Q-path j: w_n -> w_{n-1} (w_{-1} = c); level depth: b -> w_{depth-1}
        levels: list[list[list[int]]] = []
        for n in range(depth + 1):
            hi_v = mid if n == depth else ws[n]
            lo_v = c if n == 0 else ws[n - 1]
            levels.append([b.chain([hi_v, lo_v], rng, 2) for _ in range(size)])
        kept = math.ceil(depth / 2)
        roomy = size >= 2 * kept
        for k in range(depth):
            if roomy and rng.random() < 0.3:
                u_k = ws[k]
            else:
                # entry inside level k+1 on a Q-path reserved for the kept level k // 2
                seg = levels[k + 1][(k // 2) % size]
                if len(seg) == 2:
                    seg.insert(1, b.vertex())
                u_k = rng.choice(seg[1:-1])
            head = b.chain([a, u_k], rng, 1, 1)
            stops = [u_k, mid] if u_k == ws[k] else [u_k, ws[k], mid]
            P.append(head + b.chain(stops, rng, 1)[1:])
        for _ in range(rng.randint(0, 2)):
            P.append(b.chain([a, mid], rng, 2, 1))
        for j in range(size):
            seq = [mid]
            for n in range(depth, -1, -1):
                seq += levels[n][j][1:]
            Q.append(seq)
        planted |= {"depth": depth, "cut_vertices": ws, "level_widths": [size] * depth,
                    "planted_count": min(kept, size)}

    ids = {"P": [b.walk(s) for s in P], "Q": [b.walk(s) for s in Q]}
    g, paths, vperm = b.finish(rng, ids, {"P": [a] * len(P), "Q": [mid] * len(Q)})
    for key in ("terminal",):
        if key in planted:
            planted[key] = vperm[planted[key]]
    for key in ("exits", "cut_vertices"):
        if key in planted:
            planted[key] = [vperm[x] for x in planted[key]]
    A, B, C = vperm[a], vperm[mid], vperm[c]
    inst = PlantedInstance(
        g,
        {"a": A, "b": B, "c": C},
        planted,
        {"P": PathSystem(g, A, B, tuple(paths["P"])), "Q": PathSystem(g, B, C, tuple(paths["Q"]))},
    )
    verify_planted(inst)
    return inst


# -- re-verification ----------------------------------------------------------


def verify_planted(inst: PlantedInstance) -> None:
    """Re-derive the planted structure from the graph; SoundnessBreach on mismatch."""
    kind = inst.planted["kind"]
    g = inst.graph

    def need(cond: bool, what: str) -> None:
        if not cond:
            raise SoundnessBreach(f"planted {kind} instance: {what}")

    for name, s in inst.systems.items():
        need(verify_system(s).ok, f"system {name} fails verification")
    if kind == "backbone":
        bb = inst.planted["backbone"]
        width = inst.planted["width"]
        for x, y in zip(bb, bb[1:]):
            need(kappa_v(g, x, y)[0] >= width, f"floor between {x} and {y} below {width}")
        for seq in inst.systems["family"].vertex_seqs:
            pos = [seq.index(t) for t in bb]
            need(pos == sorted(pos), "family path visits the backbone out of order")
        if width >= 2:
            got = extract_backbone(g, inst.systems["family"], width)
            need(list(got.vertices) == list(bb), f"extraction gives {got.vertices}")
    elif kind == "terminal_rich":
        found = find_terminals(inst.systems["P"], inst.systems["Q"])
        need([(t.vertex, t.hitting_count) for t in found] == [(inst.planted["terminal"], inst.planted["size"])],
             f"terminals {found}")
    elif kind == "terminal_free":
        exits = exit_vertices(inst.systems["P"], inst.systems["Q"])
        need(exits == inst.planted["exits"], f"exit vertices {exits}")
        need(len(set(exits)) == len(exits), "exit vertices repeat")
        if len(exits) > 1:
            need(not find_terminals(inst.systems["P"], inst.systems["Q"]), "a terminal exists")
    elif kind == "cascade":
        cas = build_cascade(inst.systems["P"], inst.systems["Q"])
        need(list(cas.cut_vertices) == inst.planted["cut_vertices"], f"cut vertices {cas.cut_vertices}")
        need([len(q) for q in cas.q_levels] == inst.planted["level_widths"], "level widths differ")
