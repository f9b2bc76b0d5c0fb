"""Residual networks, augmenting-path max flow, successive-shortest-path
min-cost flow, and decomposition of integral flows into paths.

Arcs are stored in pairs: arc ``i`` (even) and its residual partner ``i ^ 1``.
Adjacency lists keep insertion order, so results are deterministic.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Hashable, Iterable
from dataclasses import dataclass


class Network:
    def __init__(self, node_count: int):
        self.node_count = node_count
        self.head: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.tag: list[Hashable] = []
        self.init_cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(node_count)]

    def add_arc(self, u: int, v: int, cap: int, cost: int = 0, tag: Hashable = None, back_cap: int = 0) -> int:
        """Add ``u -> v``. ``back_cap > 0`` makes the pair an undirected edge
        whose two directions share one capacity budget."""
        i = len(self.head)
        self.head += [v, u]
        self.cap += [cap, back_cap]
        self.init_cap += [cap, back_cap]
        self.cost += [cost, -cost]
        self.tag += [tag, tag]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    def tail(self, i: int) -> int:
        return self.head[i ^ 1]

    def _bfs_path(self, s: int, t: int) -> list[int] | None:
        parent = [-1] * self.node_count
        parent[s] = -2
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i in self.adj[u]:
                v = self.head[i]
                if self.cap[i] > 0 and parent[v] == -1:
                    parent[v] = i
                    if v == t:
                        arcs = []
                        while v != s:
                            arcs.append(parent[v])
                            v = self.head[parent[v] ^ 1]
                        return arcs[::-1]
                    queue.append(v)
        return None

    def _push(self, arcs: list[int], amount: int) -> None:
        for i in arcs:
            self.cap[i] -= amount
            self.cap[i ^ 1] += amount

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        value = 0
        while limit is None or value < limit:
            arcs = self._bfs_path(s, t)
            if arcs is None:
                break
            amount = min(self.cap[i] for i in arcs)
            if limit is not None:
                amount = min(amount, limit - value)
            self._push(arcs, amount)
            value += amount
        return value

    def min_cost_flow(self, s: int, t: int, want: int) -> tuple[int, int]:
        """Send up to ``want`` units along successive cheapest residual paths.

        Uses Bellman-Ford (queue based) since residual costs go negative.
        Returns ``(value, cost)``.
        """
        value = cost = 0
        inf = float("inf")
        while value < want:
            dist = [inf] * self.node_count
            via = [-1] * self.node_count
            in_queue = [False] * self.node_count
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                in_queue[u] = False
                for i in self.adj[u]:
                    if self.cap[i] <= 0:
                        continue
                    v = self.head[i]
                    nd = dist[u] + self.cost[i]
                    if nd < dist[v]:
                        dist[v] = nd
                        via[v] = i
                        if not in_queue[v]:
                            in_queue[v] = True
                            queue.append(v)
            if dist[t] == inf:
                break
            arcs = []
            v = t
            while v != s:
                arcs.append(via[v])
                v = self.tail(via[v])
            amount = min(min(self.cap[i] for i in arcs), want - value)
            self._push(arcs, amount)
            value += amount
            cost += amount * int(dist[t])
        return value, cost

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for i in self.adj[u]:
                v = self.head[i]
                if self.cap[i] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def flow_units(self) -> list[tuple[int, int, Hashable]]:
        """One ``(tail, head, tag)`` triple per unit of flow on each arc."""
        units = []
        for i in range(0, len(self.head), 2):
            f = self.init_cap[i] - self.cap[i]
            u, v = self.tail(i), self.head[i]
            if f > 0:
                units += [(u, v, self.tag[i])] * f
            elif f < 0:
                units += [(v, u, self.tag[i])] * (-f)
        return units


@dataclass(frozen=True)
class FlowPath:
    nodes: tuple[int, ...]
    tags: tuple[Hashable, ...]


def _tag_key(item: tuple[Hashable, int]) -> tuple:
    tag, head = item
    return (tag is not None, tag if isinstance(tag, int) else -1, head)


def decompose(
    units: Iterable[tuple[int, int, Hashable]],
    source: int,
    sink: int,
    value: int,
    rng: random.Random | None = None,
) -> list[FlowPath]:
    """Split an integral flow of the given value into ``value`` simple paths.

    Walks out of ``source`` along unused flow units; whenever the walk closes
    a cycle, the cycle's units are discarded and the walk resumes. Without
    ``rng`` the lowest tag is taken at every branch, otherwise a random one.
    """
    out: dict[int, list[tuple[Hashable, int]]] = {}
    for tail, head, tag in units:
        out.setdefault(tail, []).append((tag, head))
    for choices in out.values():
        choices.sort(key=_tag_key)

    paths = []
    for _ in range(value):
        nodes, tags = [source], []
        pos = {source: 0}
        v = source
        while v != sink:
            choices = out.get(v)
            if not choices:
                raise AssertionError(f"flow conservation broken at node {v}")
            idx = 0 if rng is None else rng.randrange(len(choices))
            tag, head = choices.pop(idx)
            if head in pos:
                cut = pos[head]
                for x in nodes[cut + 1:]:
                    del pos[x]
                del nodes[cut + 1:]
                del tags[cut:]
            else:
                pos[head] = len(nodes)
                nodes.append(head)
                tags.append(tag)
            v = head
        paths.append(FlowPath(tuple(nodes), tuple(tags)))
    return paths
