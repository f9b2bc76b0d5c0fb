"""Composing an a-b system with a b-c system into an a-c system.

Notation: ``P`` is an edge-disjoint, pairwise order-compatible family of a-b
paths, ``Q`` one of b-c paths, ``U`` the vertex set of ``P``. For a Q-path,
its *exit vertex* is the last vertex of ``U`` it visits (walking from b to
c), so the tail from there to c meets ``U`` only at that vertex. A vertex is
a *terminal* of ``(P, Q)`` when it lies on ``U``, on every Q-path, and every
Q-path's tail from it avoids ``U`` otherwise; equivalently, when it is the
common exit vertex of all Q-paths.

Three strategies:

* :func:`compose_via_terminal` - join P-paths through a terminal with Q-tails.
* :func:`compose_terminal_free` - Q-paths with pairwise distinct exit
  vertices, each joined to its own carrier P-path.
* :func:`build_cascade` + :func:`cascade_compose` - a chain of low-hitting
  terminals ``w_0, w_1, ...`` cutting the Q-paths into levels, then paths
  that enter the levels from P and leave along fresh Q-paths.

Every output is checked pairwise against the concatenation preconditions and
then as a whole with :func:`~ocpaths.order.verify_system`.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import (
    EmptyFamily,
    EndpointMismatch,
    HypothesisViolated,
    InfeasibleError,
    InputError,
    LevelExhausted,
    NoTerminalAtLevel,
    NotATerminal,
    NothingFound,
    SoundnessBreach,
    TerminalExists,
    UnverifiedSystem,
)
from .graph import MultiGraph, OrientedPath, PathSystem
from .order import check_concatenation, verify_system


@dataclass(frozen=True)
class TerminalReport:
    vertex: int
    hitting_count: int
    on_all_Q: bool = True


@dataclass(frozen=True)
class Cascade:
    """Cut-vertices ``w_0 .. w_{d-1}`` with nested families and segment levels.

    ``p_levels[n]`` / ``q_levels[n]`` are the index sets ``P_n`` / ``Q_n``.
    ``sigma[n]`` holds ``(q_index, segment)`` for every Q-path of level ``n``;
    segments run along Q (towards c) from ``w_n`` to ``w_{n-1}``, with
    ``w_{-1} = c``. The final entry ``sigma[d]`` is the closing level of
    ``b .. w_{d-1}`` segments over ``Q_{d-1}``.
    """

    cut_vertices: tuple[int, ...]
    p_levels: tuple[tuple[int, ...], ...]
    q_levels: tuple[tuple[int, ...], ...]
    sigma: tuple[tuple[tuple[int, OrientedPath], ...], ...]
    sink: int
    hit_cap: int
    sigma_vertices: tuple[frozenset[int], ...] = field(default=(), compare=False)

    @property
    def depth(self) -> int:
        return len(self.cut_vertices)

    def level_family(self, n: int) -> tuple[int, ...]:
        """Q-indices owning segments at level ``n`` (closing level included)."""
        return self.q_levels[min(n, self.depth - 1)]

    def cut_of(self, n: int) -> int:
        return self.sink if n == 0 else self.cut_vertices[n - 1]

    def to_lines(self) -> list[str]:
        return [f"level {n} cut {self.cut_of(n)} segs {len(level)}" for n, level in enumerate(self.sigma)]


# -- shared helpers -----------------------------------------------------------


def _prepare(P: PathSystem, Q: PathSystem) -> tuple[MultiGraph, tuple, tuple]:
    if P.graph != Q.graph:
        raise EndpointMismatch("P and Q live in different graphs")
    if P.sink != Q.source:
        raise EndpointMismatch(f"P ends at {P.sink} but Q starts at {Q.source}")
    if P.source == Q.sink:
        raise EndpointMismatch("a and c coincide")
    for name, s in (("P", P), ("Q", Q)):
        report = verify_system(s)
        if not report.ok:
            raise UnverifiedSystem(f"{name} fails verification: {report.certificate}")
    return P.graph, P.vertex_seqs, Q.vertex_seqs


def _union(seqs: Sequence[Sequence[int]], indices: Sequence[int] | None = None) -> set[int]:
    out: set[int] = set()
    for i in range(len(seqs)) if indices is None else indices:
        out.update(seqs[i])
    return out


def _exit_vertex(qseq: Sequence[int], U: set[int]) -> int:
    for v in reversed(qseq):
        if v in U:
            return v
    raise SoundnessBreach("Q-path never meets the P-union")


def _prefix(p: OrientedPath, seq: Sequence[int], v: int) -> OrientedPath:
    return OrientedPath(p.start, p.edges[: seq.index(v)])


def _suffix(p: OrientedPath, seq: Sequence[int], v: int) -> OrientedPath:
    return OrientedPath(v, p.edges[seq.index(v):])


def _assemble(g: MultiGraph, a: int, c: int, legs: list[tuple[OrientedPath, OrientedPath]]) -> PathSystem:
    """Join prefix/suffix legs; every pair must meet the concatenation preconditions."""
    for i in range(len(legs)):
        for j in range(i + 1, len(legs)):
            try:
                check_concatenation(g, legs[i][0], legs[j][0], legs[i][1], legs[j][1])
            except HypothesisViolated as exc:
                raise SoundnessBreach(f"legs {i} and {j}: {exc}") from None
    paths = tuple(OrientedPath(a, pre.edges + suf.edges) for pre, suf in legs)
    out = PathSystem(g, a, c, paths)
    report = verify_system(out)
    if not report.ok:
        raise SoundnessBreach(f"composed system fails verification: {report.certificate}")
    return out


# -- terminals ----------------------------------------------------------------


def _terminals(pseqs, qseqs, p_idx, q_idx) -> list[TerminalReport]:
    if not q_idx:
        return []
    U = _union(pseqs, p_idx)
    exits = {_exit_vertex(qseqs[j], U) for j in q_idx}
    if len(exits) != 1:
        return []
    v = exits.pop()
    return [TerminalReport(v, sum(1 for i in p_idx if v in pseqs[i]))]


def find_terminals(P: PathSystem, Q: PathSystem) -> list[TerminalReport]:
    """All (P, Q)-terminals, by descending hitting count then vertex.

    Every terminal is the common exit vertex of all Q-paths, so at most one
    exists.
    """
    if not P.paths or not Q.paths:
        raise EmptyFamily("both systems must be nonempty")
    _, pseqs, qseqs = _prepare(P, Q)
    found = _terminals(pseqs, qseqs, range(len(pseqs)), range(len(qseqs)))
    return sorted(found, key=lambda t: (-t.hitting_count, t.vertex))


def is_terminal(P: PathSystem, Q: PathSystem, v: int) -> bool:
    """Check the three defining clauses directly, without exit vertices."""
    U = _union(P.vertex_seqs)
    if v not in U:
        return False
    for q in Q.vertex_seqs:
        if v not in q or set(q[q.index(v):]) & U != {v}:
            return False
    return True


def compose_via_terminal(P: PathSystem, Q: PathSystem, t: TerminalReport) -> PathSystem:
    """Join the P-paths through terminal ``t`` with Q-paths, pairwise in index order."""
    g, pseqs, qseqs = _prepare(P, Q)
    v = t.vertex
    carriers = [i for i, seq in enumerate(pseqs) if v in seq]
    if not is_terminal(P, Q, v) or len(carriers) != t.hitting_count:
        raise NotATerminal(f"vertex {v} is not a terminal with hitting count {t.hitting_count}")
    m = min(len(carriers), len(qseqs))
    legs = [
        (_prefix(P.paths[i], pseqs[i], v), _suffix(Q.paths[j], qseqs[j], v))
        for i, j in zip(carriers[:m], range(m))
    ]
    return _assemble(g, P.source, Q.sink, legs)


def exit_vertices(P: PathSystem, Q: PathSystem) -> list[int]:
    U = _union(P.vertex_seqs)
    return [_exit_vertex(q, U) for q in Q.vertex_seqs]


def compose_terminal_free(P: PathSystem, Q: PathSystem) -> PathSystem:
    """Pair Q-paths having distinct exit vertices with distinct carrier P-paths.

    Q-paths are scanned in index order. A Q-path is taken when its exit vertex
    ``v`` avoids every carrier chosen so far, with carrier the first P-path
    through ``v`` whose prefix up to ``v`` avoids all exit vertices chosen so
    far. Raises TerminalExists when all Q-paths share one exit vertex.
    """
    if not P.paths or not Q.paths:
        raise EmptyFamily("both systems must be nonempty")
    g, pseqs, qseqs = _prepare(P, Q)
    U = _union(pseqs)
    exits = [_exit_vertex(q, U) for q in qseqs]
    for q, v in zip(qseqs, exits):
        if set(q[q.index(v):]) & U != {v}:
            raise SoundnessBreach(f"exit vertex {v} has a dirty tail")
    if len(set(exits)) == 1:
        raise TerminalExists(exits[0])

    covered: set[int] = set()
    chosen_exits: set[int] = set()
    legs = []
    for j, v in enumerate(exits):
        if v in covered:
            continue
        for i, seq in enumerate(pseqs):
            if v in seq and not chosen_exits.intersection(seq[: seq.index(v)]):
                break
        else:
            continue
        covered.update(pseqs[i])
        chosen_exits.add(v)
        legs.append((_prefix(P.paths[i], pseqs[i], v), _suffix(Q.paths[j], qseqs[j], v)))
    return _assemble(g, P.source, Q.sink, legs)


# -- cascades -----------------------------------------------------------------


def _segment(q: OrientedPath, seq: Sequence[int], start: int, stop: int) -> OrientedPath:
    i, j = seq.index(start), seq.index(stop)
    return OrientedPath(start, q.edges[i:j])


def build_cascade(P: PathSystem, Q: PathSystem, hit_cap: int | None = None,
                  max_depth: int | None = None) -> Cascade:
    """Chain terminals ``w_0, w_1, ...`` hit by at most ``hit_cap`` P-paths.

    Level ``n`` groups the current Q-paths by exit vertex with respect to the
    current P-paths, keeps the largest group whose vertex lies on at most
    ``hit_cap`` P-paths (ties: lowest vertex; b never qualifies), and drops
    every P-path through that vertex. Stops at ``max_depth``, when a family runs out, or when no
    group qualifies (NoTerminalAtLevel if that happens at level 0).
    """
    g, pseqs, qseqs = _prepare(P, Q)
    if not P.paths or not Q.paths:
        raise EmptyFamily("both systems must be nonempty")
    if hit_cap is None:
        hit_cap = math.ceil(len(pseqs) / 2)
    if max_depth is None:
        max_depth = len(pseqs)
    if hit_cap < 1 or max_depth < 1:
        raise InputError("hit_cap and max_depth must be positive")

    cuts: list[int] = []
    p_levels: list[tuple[int, ...]] = []
    q_levels: list[tuple[int, ...]] = []
    p_cur = tuple(range(len(pseqs)))
    q_cur = tuple(range(len(qseqs)))
    while len(cuts) < max_depth and p_cur and q_cur:
        U = _union(pseqs, p_cur)
        groups: dict[int, list[int]] = {}
        for j in q_cur:
            groups.setdefault(_exit_vertex(qseqs[j], U), []).append(j)
        hits = {v: sum(1 for i in p_cur if v in pseqs[i]) for v in groups}
        # a cut at b itself would leave an empty closing level
        ok = [v for v in groups if hits[v] <= hit_cap and v != Q.source]
        if not ok:
            if not cuts:
                raise NoTerminalAtLevel(0, Cascade((), (), (), (), Q.sink, hit_cap))
            break
        w = min(ok, key=lambda v: (-len(groups[v]), v))
        cuts.append(w)
        p_levels.append(p_cur)
        q_levels.append(tuple(groups[w]))
        p_cur = tuple(i for i in p_cur if w not in pseqs[i])
        q_cur = tuple(groups[w])

    c, b = Q.sink, Q.source
    d = len(cuts)
    sigma = []
    for n in range(d + 1):
        hi = b if n == d else cuts[n]
        lo = c if n == 0 else cuts[n - 1]
        fam = q_levels[min(n, d - 1)]
        sigma.append(tuple((j, _segment(Q.paths[j], qseqs[j], hi, lo)) for j in fam))
    sigma_vertices = tuple(
        frozenset(v for j, seg in level for v in seg.vertices(g)) for level in sigma
    )
    cascade = Cascade(tuple(cuts), tuple(p_levels), tuple(q_levels), tuple(sigma), c, hit_cap, sigma_vertices)
    check_cascade(P, Q, cascade)
    return cascade


def check_cascade(P: PathSystem, Q: PathSystem, cascade: Cascade) -> None:
    """Assert the nesting, progress and level-disjointness properties."""
    pseqs, qseqs = P.vertex_seqs, Q.vertex_seqs
    d = cascade.depth
    for n, w in enumerate(cascade.cut_vertices):
        found = _terminals(pseqs, qseqs, cascade.p_levels[n], cascade.q_levels[n])
        if [t.vertex for t in found] != [w]:
            raise SoundnessBreach(f"w_{n}={w} is not a terminal of its level")
        for m in range(n, d):
            if any(w not in qseqs[j] for j in cascade.q_levels[m]):
                raise SoundnessBreach(f"w_{n} missing from a path of Q_{m}")
        if n + 1 < d and w in _union(pseqs, cascade.p_levels[n + 1]):
            raise SoundnessBreach(f"w_{n} still lies on P_{n + 1}")
        if n + 1 < d and not set(cascade.q_levels[n + 1]) <= set(cascade.q_levels[n]):
            raise SoundnessBreach("Q-levels are not nested")
        if n + 1 < d and not set(cascade.p_levels[n + 1]) <= set(cascade.p_levels[n]):
            raise SoundnessBreach("P-levels are not nested")
    sv = cascade.sigma_vertices
    for m in range(len(sv)):
        for n in range(m + 1, len(sv)):
            common = sv[m] & sv[n]
            if common and (n != m + 1 or common != {cascade.cut_vertices[m]}):
                raise SoundnessBreach(f"levels {m} and {n} meet in {sorted(common)}")


def cascade_compose(P: PathSystem, Q: PathSystem, cascade: Cascade) -> PathSystem:
    """Assemble ``a P_k u_k I_k v_k Q_k c`` over a thinned set of levels.

    For each level ``k`` the first P-path of ``P_k`` through ``w_k`` enters the
    segment levels first at ``u_k``, which lies on level ``n_k >= k`` (the
    highest level containing it). Levels are kept greedily when
    ``n_k >= 1`` and ``n_k`` is at least two above the last kept one. Then
    ``v_k = w_{n_k - 1}``, ``I_k`` runs from ``u_k`` to ``v_k`` along the first
    Q-path of that level through ``u_k``, and ``Q_k`` is a not yet used path of
    ``Q_{n_k - 1}`` (the same path when possible).

    Raises LevelExhausted, carrying the verified partial system, when no
    unused Q-path remains.
    """
    g, pseqs, qseqs = _prepare(P, Q)
    check_cascade(P, Q, cascade)
    a, c = P.source, Q.sink
    sv = cascade.sigma_vertices
    all_sigma = frozenset().union(*sv)
    legs: list[tuple[OrientedPath, OrientedPath]] = []
    used: set[int] = set()
    last_n: int | None = None
    for k, w in enumerate(cascade.cut_vertices):
        pk = next(i for i in cascade.p_levels[k] if w in pseqs[i])
        seq = pseqs[pk]
        u = next(v for v in seq if v in all_sigma)
        n_k = max(n for n in range(len(sv)) if u in sv[n])
        if n_k < k:
            raise SoundnessBreach(f"entry level {n_k} of carrier {k} is below {k}")
        if n_k < 1 or (last_n is not None and n_k < last_n + 2):
            continue
        v_k = cascade.cut_vertices[n_k - 1]
        q_inner = next(j for j, seg in cascade.sigma[n_k] if u in seg.vertices(g))
        family = cascade.level_family(n_k - 1)
        if q_inner in family and q_inner not in used:
            q_outer = q_inner
        else:
            q_outer = next((j for j in family if j not in used), None)
            if q_outer is None:
                raise LevelExhausted(k, _assemble(g, a, c, legs))
        interval = _segment(Q.paths[q_inner], qseqs[q_inner], u, v_k)
        tail = _suffix(Q.paths[q_outer], qseqs[q_outer], v_k)
        legs.append((_prefix(P.paths[pk], seq, u), OrientedPath(u, interval.edges + tail.edges)))
        used.update((q_inner, q_outer))
        last_n = n_k
    return _assemble(g, a, c, legs)


# -- dispatcher ---------------------------------------------------------------

STRATEGIES = ("terminal", "terminal_free", "cascade")


def compose_strategies(P: PathSystem, Q: PathSystem, hit_cap: int | None = None) -> dict[str, PathSystem | Exception]:
    """Run every strategy; failures are returned in place of a system."""
    results: dict[str, PathSystem | Exception] = {}
    try:
        terminals = find_terminals(P, Q)
        results["terminal"] = (
            compose_via_terminal(P, Q, terminals[0]) if terminals else NotATerminal("no terminal")
        )
    except (InputError, InfeasibleError) as exc:
        results["terminal"] = exc
    try:
        results["terminal_free"] = compose_terminal_free(P, Q)
    except (InputError, InfeasibleError) as exc:
        results["terminal_free"] = exc
    try:
        cascade = build_cascade(P, Q, hit_cap=hit_cap)
        results["cascade"] = cascade_compose(P, Q, cascade)
    except LevelExhausted as exc:
        results["cascade"] = exc.partial
    except (InputError, InfeasibleError) as exc:
        results["cascade"] = exc
    return results


def compose(P: PathSystem, Q: PathSystem, hit_cap: int | None = None) -> PathSystem:
    """Largest verified a-c system among the three strategies."""
    system, _ = compose_best(P, Q, hit_cap)
    return system


def compose_best(P: PathSystem, Q: PathSystem, hit_cap: int | None = None) -> tuple[PathSystem, str]:
    _prepare(P, Q)
    results = compose_strategies(P, Q, hit_cap)
    best_name, best = None, None
    for name in STRATEGIES:
        got = results[name]
        if isinstance(got, PathSystem) and (best is None or len(got) > len(best)):
            best_name, best = name, got
    if best is None or len(best) == 0:
        raise NothingFound("no strategy produced an a-c path")
    return best, best_name
