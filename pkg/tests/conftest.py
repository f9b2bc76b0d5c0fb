import itertools

import pytest
from hypothesis import strategies as st

from ocpaths.graph import MultiGraph, OrientedPath, PathSystem


def theta_graph() -> MultiGraph:
    # a=0, b=1: direct edge plus a-x-b and a-y-b
    return MultiGraph(4, ((0, 1), (0, 2), (2, 1), (0, 3), (3, 1)))


def crossing_graph() -> MultiGraph:
    # a=0, u=1, v=2, b=3; edges au, av, uv, uv, ub, vb
    return MultiGraph(4, ((0, 1), (0, 2), (1, 2), (1, 2), (1, 3), (2, 3)))


def k4() -> MultiGraph:
    return MultiGraph(4, tuple(itertools.combinations(range(4), 2)))


def parallel(k: int) -> MultiGraph:
    return MultiGraph(2, ((0, 1),) * k)


@pytest.fixture
def theta():
    return theta_graph()


@pytest.fixture
def crossing():
    return crossing_graph()


def crossing_pair(g: MultiGraph) -> PathSystem:
    """a-u-v-b and a-v-u-b on the crossing graph: edge-disjoint, but crossing."""
    return PathSystem(g, 0, 3, (OrientedPath(0, (0, 2, 5)), OrientedPath(0, (1, 3, 4))))


@st.composite
def multigraphs(draw, min_n: int = 2, max_n: int = 7, max_m: int = 12, max_mult: int = 3) -> MultiGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    counts = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, c in zip(pairs, counts) for _ in range(c)][:max_m]
    edges = draw(st.permutations(edges))
    flip = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return MultiGraph(n, tuple((v, u) if f else (u, v) for (u, v), f in zip(edges, flip)))


@st.composite
def graph_with_pair(draw, **kw):
    g = draw(multigraphs(**kw))
    a, b = draw(st.sampled_from(list(itertools.combinations(range(g.vertex_count), 2))))
    if draw(st.booleans()):
        a, b = b, a
    return g, a, b
