"""Multigraphs, oriented paths, path systems and their text formats.

Graph file (``ocg 1``)::

    ocg 1
    n 4
    m 3
    e 0 0 1
    e 1 0 1
    e 2 1 3

Path line: ``path <start> : <eid> <eid> ...``. A system file starts with
``system <source> <sink>`` followed by path lines. ``#`` starts a comment.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DuplicateEdgeId,
    MixedEndpoints,
    NotIncident,
    ParseError,
    RangeError,
    RepeatedVertex,
    SameEndpoints,
    UnknownEdge,
)


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loopless multigraph; edge ``i`` is ``edges[i]``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for eid, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError(f"edge {eid} is a loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {eid} has an endpoint outside 0..{self.vertex_count - 1}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise NotIncident(f"edge {eid} is not incident to vertex {v}")

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incidence[u] if self.other(e, u) == v]

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.other(e, u) == v for e in self.incidence[u])


@dataclass(frozen=True)
class OrientedPath:
    """A path given by its start vertex and the edge ids it traverses.

    The vertex sequence depends on the host graph; see :meth:`vertices`.
    """

    start: int
    edges: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(int(e) for e in self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self, g: MultiGraph) -> tuple[int, ...]:
        return validate_path(g, self)

    def end(self, g: MultiGraph) -> int:
        return self.vertices(g)[-1]

    def subpath(self, g: MultiGraph, u: int, v: int) -> OrientedPath:
        """The subpath ``uPv``; ``u`` must not come after ``v``."""
        vs = self.vertices(g)
        try:
            i, j = vs.index(u), vs.index(v)
        except ValueError:
            raise ValueError(f"{u} or {v} is not on the path") from None
        if i > j:
            raise ValueError(f"{u} comes after {v} on the path")
        return OrientedPath(u, self.edges[i:j])

    def reverse(self, g: MultiGraph) -> OrientedPath:
        return OrientedPath(self.end(g), self.edges[::-1])

    def concat(self, g: MultiGraph, other: OrientedPath) -> OrientedPath:
        """Join ``self`` and ``other`` at their common vertex and validate."""
        if self.end(g) != other.start:
            raise NotIncident(f"path ends at {self.end(g)}, next starts at {other.start}")
        joined = OrientedPath(self.start, self.edges + other.edges)
        validate_path(g, joined)
        return joined


def validate_path(g: MultiGraph, p: OrientedPath) -> tuple[int, ...]:
    """Return the vertex sequence of ``p`` in ``g``, or raise InvalidPath."""
    if not 0 <= p.start < g.vertex_count:
        raise UnknownEdge(f"start vertex {p.start} not in graph")
    seq = [p.start]
    seen = {p.start}
    cur = p.start
    for eid in p.edges:
        if not 0 <= eid < g.edge_count:
            raise UnknownEdge(f"unknown edge id {eid}")
        u, v = g.edges[eid]
        if cur == u:
            cur = v
        elif cur == v:
            cur = u
        else:
            raise NotIncident(f"edge {eid} ({u},{v}) does not continue from vertex {cur}")
        if cur in seen:
            raise RepeatedVertex(f"vertex {cur} revisited")
        seen.add(cur)
        seq.append(cur)
    return tuple(seq)


@dataclass(frozen=True)
class PathSystem:
    """An ordered family of source-sink paths in one graph.

    Endpoint agreement is checked lazily (by :attr:`vertex_seqs`) so that
    :func:`ocpaths.order.verify_system` can report it.
    """

    graph: MultiGraph
    source: int
    sink: int
    paths: tuple[OrientedPath, ...] = ()

    def __post_init__(self) -> None:
        if self.source == self.sink:
            raise SameEndpoints(f"source and sink are both {self.source}")
        object.__setattr__(self, "paths", tuple(self.paths))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[OrientedPath]:
        return iter(self.paths)

    def __getitem__(self, i: int) -> OrientedPath:
        return self.paths[i]

    @cached_property
    def vertex_seqs(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for i, p in enumerate(self.paths):
            seq = validate_path(self.graph, p)
            if seq[0] != self.source or seq[-1] != self.sink:
                raise MixedEndpoints(
                    f"path {i} runs {seq[0]}->{seq[-1]}, system is {self.source}->{self.sink}"
                )
            out.append(seq)
        return tuple(out)

    def select(self, indices: Iterable[int]) -> PathSystem:
        return PathSystem(self.graph, self.source, self.sink, tuple(self.paths[i] for i in indices))

    def with_paths(self, paths: Iterable[OrientedPath]) -> PathSystem:
        return PathSystem(self.graph, self.source, self.sink, tuple(paths))

    def total_edges(self) -> int:
        return sum(len(p) for p in self.paths)


def partition_by_length(s: PathSystem) -> dict[int, PathSystem]:
    """Bucket the paths of ``s`` by edge count (keys ascending)."""
    buckets: dict[int, list[OrientedPath]] = {}
    for p in s.paths:
        buckets.setdefault(len(p), []).append(p)
    return {k: s.with_paths(buckets[k]) for k in sorted(buckets)}


# -- text formats -------------------------------------------------------------


def _lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str | bytes) -> MultiGraph:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    it = iter(lines)

    def expect(key: str) -> int:
        try:
            lineno, toks = next(it)
        except StopIteration:
            raise ParseError(f"missing {key!r} line") from None
        if len(toks) != 2 or toks[0] != key:
            raise ParseError(f"expected '{key} <int>'", lineno)
        val = _int(toks[1], lineno)
        if val < 0:
            raise ParseError(f"{key} must be nonnegative", lineno)
        return val

    lineno, toks = next(it)
    if toks != ["ocg", "1"]:
        raise ParseError("expected header 'ocg 1'", lineno)
    n = expect("n")
    m = expect("m")
    edges: dict[int, tuple[int, int]] = {}
    for lineno, toks in it:
        if toks[0] != "e" or len(toks) != 4:
            raise ParseError("expected 'e <id> <u> <v>'", lineno)
        eid, u, v = (_int(t, lineno) for t in toks[1:])
        if eid in edges:
            raise DuplicateEdgeId(f"edge id {eid} repeated", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(f"endpoint out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not 0 <= eid < m:
            raise ParseError(f"edge id {eid} outside 0..{m - 1}", lineno)
        edges[eid] = (u, v)
    if len(edges) != m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}")
    return MultiGraph(n, tuple(edges[i] for i in range(m)))


def format_graph(g: MultiGraph) -> str:
    out = ["ocg 1", f"n {g.vertex_count}", f"m {g.edge_count}"]
    out += [f"e {i} {u} {v}" for i, (u, v) in enumerate(g.edges)]
    return "\n".join(out) + "\n"


def format_path(p: OrientedPath) -> str:
    return " ".join(["path", str(p.start), ":", *map(str, p.edges)])


def _parse_path_tokens(toks: Sequence[str], lineno: int) -> OrientedPath:
    if len(toks) < 3 or toks[0] != "path" or toks[2] != ":":
        raise ParseError("expected 'path <start> : <eid> ...'", lineno)
    return OrientedPath(_int(toks[1], lineno), tuple(_int(t, lineno) for t in toks[3:]))


def parse_path(line: str) -> OrientedPath:
    lines = list(_lines(line))
    if len(lines) != 1:
        raise ParseError("expected exactly one path line")
    return _parse_path_tokens(lines[0][1], lines[0][0])


def format_system(s: PathSystem) -> str:
    return "\n".join([f"system {s.source} {s.sink}", *map(format_path, s.paths)]) + "\n"


def parse_system(text: str | bytes, g: MultiGraph) -> PathSystem:
    """Parse a system file. Paths are validated against ``g``."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty system file", 1)
    lineno, toks = lines[0]
    if len(toks) != 3 or toks[0] != "system":
        raise ParseError("expected 'system <source> <sink>'", lineno)
    source, sink = _int(toks[1], lineno), _int(toks[2], lineno)
    for v in (source, sink):
        if not 0 <= v < g.vertex_count:
            raise RangeError(f"vertex {v} not in graph", lineno)
    if source == sink:
        raise ParseError("source equals sink", lineno)
    paths = []
    for lineno, toks in lines[1:]:
        p = _parse_path_tokens(toks, lineno)
        try:
            validate_path(g, p)
        except Exception as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        paths.append(p)
    return PathSystem(g, source, sink, tuple(paths))
