"""Menger-type quantities via unit-capacity flows.

``kappa_e`` counts edge-disjoint a-b paths, ``kappa_v`` internally
vertex-disjoint ones (each parallel a-b edge is its own path). Both return
the value together with a witness :class:`PathSystem`.
"""

from __future__ import annotations

import random
from collections.abc import Collection
from dataclasses import dataclass

from .errors import AdjacentEndpoints, BadParameters, Infeasible, SameEndpoints, SoundnessBreach
from .flow import Network, decompose
from .graph import MultiGraph, OrientedPath, PathSystem


@dataclass(frozen=True)
class Separator:
    vertices: frozenset[int]
    separated: tuple[int, int]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ConnectivityReport:
    kappa_e: int
    kappa_v: int


def _check_pair(g: MultiGraph, a: int, b: int) -> None:
    if a == b:
        raise SameEndpoints(f"a and b are both {a}")
    for v in (a, b):
        if not 0 <= v < g.vertex_count:
            raise BadParameters(f"vertex {v} not in graph")


def _edge_network(g: MultiGraph, *, costs: bool = False) -> Network:
    net = Network(g.vertex_count)
    for eid, (u, v) in enumerate(g.edges):
        if costs:
            # two independent directed arcs; an optimal flow never uses both
            net.add_arc(u, v, 1, 1, tag=eid)
            net.add_arc(v, u, 1, 1, tag=eid)
        else:
            net.add_arc(u, v, 1, tag=eid, back_cap=1)
    return net


def _system_from_flow(g: MultiGraph, net: Network, a: int, b: int, value: int,
                      rng: random.Random | None = None) -> PathSystem:
    paths = []
    for fp in decompose(net.flow_units(), a, b, value, rng):
        paths.append(OrientedPath(a, tuple(t for t in fp.tags if t is not None)))
    return PathSystem(g, a, b, tuple(paths))


def kappa_e(g: MultiGraph, a: int, b: int) -> tuple[int, PathSystem]:
    """Maximum number of pairwise edge-disjoint a-b paths, with a witness."""
    _check_pair(g, a, b)
    net = _edge_network(g)
    value = net.max_flow(a, b)
    return value, _system_from_flow(g, net, a, b, value)


def _split_network(g: MultiGraph, a: int, b: int, avoid_vertices: Collection[int],
                   avoid_edges: Collection[int]) -> tuple[Network, int]:
    # in(v) = v, out(v) = v + n for internal v; a and b are not split
    n = g.vertex_count
    big = g.edge_count + n + 1
    net = Network(2 * n)

    def out(v: int) -> int:
        return v if v in (a, b) else v + n

    for v in range(n):
        if v not in (a, b) and v not in avoid_vertices:
            net.add_arc(v, v + n, 1)
    for eid, (u, v) in enumerate(g.edges):
        if eid in avoid_edges or u in avoid_vertices or v in avoid_vertices:
            continue
        if {u, v} == {a, b}:
            net.add_arc(a, b, 1, tag=eid)
            continue
        net.add_arc(out(u), v, big, tag=eid)
        net.add_arc(out(v), u, big, tag=eid)
    return net, n


def kappa_v(g: MultiGraph, a: int, b: int, *, avoid_vertices: Collection[int] = (),
            avoid_edges: Collection[int] = ()) -> tuple[int, PathSystem]:
    """Maximum number of internally vertex-disjoint a-b paths, with a witness.

    ``avoid_vertices`` / ``avoid_edges`` compute the same quantity in the
    graph with that material deleted (edge ids are kept).
    """
    _check_pair(g, a, b)
    if a in avoid_vertices or b in avoid_vertices:
        raise BadParameters("cannot avoid an endpoint")
    net, _ = _split_network(g, a, b, frozenset(avoid_vertices), frozenset(avoid_edges))
    value = net.max_flow(a, b)
    return value, _system_from_flow(g, net, a, b, value)


def connectivity_report(g: MultiGraph, a: int, b: int) -> ConnectivityReport:
    return ConnectivityReport(kappa_e(g, a, b)[0], kappa_v(g, a, b)[0])


def min_internal_separator(g: MultiGraph, a: int, b: int) -> Separator:
    """A minimum vertex set avoiding a, b whose deletion separates them.

    Taken from the source side of a minimum cut in the split network, so among
    minimum separators it is the one closest to ``a``.
    """
    _check_pair(g, a, b)
    if g.adjacent(a, b):
        raise AdjacentEndpoints(f"{a} and {b} are joined by an edge")
    net, n = _split_network(g, a, b, frozenset(), frozenset())
    value = net.max_flow(a, b)
    side = net.reachable(a)
    cut = frozenset(v for v in range(n) if v not in (a, b) and v in side and v + n not in side)
    if len(cut) != value:
        raise SoundnessBreach(f"separator size {len(cut)} differs from flow value {value}")
    return Separator(cut, (a, b))


def min_total_edge_system(g: MultiGraph, a: int, b: int, k: int,
                          rng: random.Random | None = None) -> PathSystem:
    """``k`` edge-disjoint a-b paths with the least total number of edges.

    Solved as a unit-cost min-cost flow of value ``k``. ``rng`` randomises the
    tie-breaks of the path decomposition (the total is unaffected).
    """
    _check_pair(g, a, b)
    if k < 1:
        raise BadParameters("k must be positive")
    net = _edge_network(g, costs=True)
    value, cost = net.min_cost_flow(a, b, k)
    if value < k:
        raise Infeasible(f"only {value} edge-disjoint paths exist between {a} and {b}, asked for {k}")
    units = net.flow_units()
    seen: dict[int, tuple[int, int]] = {}
    for tail, head, tag in units:
        if tag in seen:
            raise SoundnessBreach(f"edge {tag} carries flow in both directions")
        seen[tag] = (tail, head)
    system = _system_from_flow(g, net, a, b, value, rng)
    if system.total_edges() != cost:
        raise SoundnessBreach(f"decomposed total {system.total_edges()} differs from flow cost {cost}")
    return system
