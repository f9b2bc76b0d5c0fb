import pytest
from hypothesis import given, strategies as st

from ocpaths.errors import (
    DuplicateEdgeId, MixedEndpoints, NotIncident, ParseError, RangeError, RepeatedVertex,
    SameEndpoints, UnknownEdge,
)
from ocpaths.graph import (
    MultiGraph, OrientedPath, PathSystem, format_graph, format_path, format_system,
    parse_graph, parse_path, parse_system, partition_by_length, validate_path,
)

from conftest import multigraphs, parallel


def test_parse_minimal():
    g = parse_graph("ocg 1\nn 2\nm 1\ne 0 0 1\n")
    assert g.vertex_count == 2 and g.edges == ((0, 1),)


def test_parallel_pair_accepted():
    g = parse_graph("ocg 1\nn 2\nm 2\ne 0 0 1\ne 1 0 1\n")
    assert g.edges_between(0, 1) == [0, 1]


def test_range_error_reports_line():
    with pytest.raises(RangeError) as err:
        parse_graph("ocg 1\nn 2\nm 1\ne 0 0 2\n")
    assert err.value.lineno == 4


@pytest.mark.parametrize("text, exc", [
    ("", ParseError),
    ("ocg 2\nn 1\nm 0\n", ParseError),
    ("ocg 1\nn 2\nm 2\ne 0 0 1\ne 0 1 0\n", DuplicateEdgeId),
    ("ocg 1\nn 2\nm 1\ne 0 1 1\n", ParseError),
    ("ocg 1\nn 2\nm 2\ne 0 0 1\n", ParseError),
    ("ocg 1\nn 2\nm 1\ne 0 0 x\n", ParseError),
    ("ocg 1\nn 3\nm 1\ne 5 0 1\n", ParseError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


def test_comments_and_order_ignored():
    g = parse_graph("# demo\nocg 1\nn 3  # three\nm 2\ne 1 1 2\ne 0 0 1\n")
    assert g.edges == ((0, 1), (1, 2))


@given(multigraphs(max_n=9, max_m=20))
def test_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_validate_path_examples():
    g = MultiGraph(4, ((0, 1), (2, 3), (1, 2), (2, 0), (0, 3)))
    assert validate_path(g, OrientedPath(0, (0,))) == (0, 1)
    with pytest.raises(NotIncident):
        validate_path(g, OrientedPath(0, (0, 1)))
    with pytest.raises(RepeatedVertex):
        validate_path(g, OrientedPath(0, (0, 2, 3, 4)))
    with pytest.raises(UnknownEdge):
        validate_path(g, OrientedPath(0, (9,)))
    assert validate_path(g, OrientedPath(2)) == (2,)


@given(multigraphs(), st.data())
def test_validate_iff_simple_chain(g, data):
    if not g.edge_count:
        return
    start = data.draw(st.integers(0, g.vertex_count - 1))
    edges = data.draw(st.lists(st.integers(0, g.edge_count - 1), max_size=5))
    # independent walk
    cur, seen, ok = start, [start], True
    for e in edges:
        u, v = g.edges[e]
        if cur not in (u, v):
            ok = False
            break
        cur = v if cur == u else u
        seen.append(cur)
    ok = ok and len(set(seen)) == len(seen)
    try:
        seq = validate_path(g, OrientedPath(start, tuple(edges)))
    except (NotIncident, RepeatedVertex):
        assert not ok
    else:
        assert ok and len(seq) == len(edges) + 1


def test_subpath_reverse_concat():
    g = MultiGraph(4, ((0, 1), (1, 2), (2, 3)))
    p = OrientedPath(0, (0, 1, 2))
    assert p.subpath(g, 1, 3) == OrientedPath(1, (1, 2))
    assert p.reverse(g) == OrientedPath(3, (2, 1, 0))
    assert OrientedPath(0, (0,)).concat(g, OrientedPath(1, (1, 2))) == p
    with pytest.raises(ValueError):
        p.subpath(g, 3, 1)


def test_partition_by_length():
    g = MultiGraph(3, ((0, 2), (0, 2), (0, 1), (1, 2)))
    s = PathSystem(g, 0, 2, (OrientedPath(0, (0,)), OrientedPath(0, (2, 3)), OrientedPath(0, (1,))))
    parts = partition_by_length(s)
    assert list(parts) == [1, 2]
    assert len(parts[1]) == 2 and len(parts[2]) == 1
    assert parts[1].source == 0 and parts[1].sink == 2
    assert partition_by_length(PathSystem(g, 0, 2)) == {}
    g5 = parallel(5)
    s5 = PathSystem(g5, 0, 1, tuple(OrientedPath(0, (e,)) for e in range(5)))
    assert {k: len(v) for k, v in partition_by_length(s5).items()} == {1: 5}


def test_system_format_round_trip():
    g = parallel(3)
    s = PathSystem(g, 0, 1, tuple(OrientedPath(0, (e,)) for e in range(3)))
    assert parse_system(format_system(s), g) == s
    assert parse_path(format_path(s.paths[1])) == s.paths[1]


def test_system_errors():
    g = parallel(2)
    with pytest.raises(SameEndpoints):
        PathSystem(g, 1, 1)
    with pytest.raises(ParseError):
        parse_system("system 0\n", g)
    with pytest.raises(RangeError):
        parse_system("system 0 7\n", g)
    with pytest.raises(RepeatedVertex):
        parse_system("system 0 1\npath 1 : 0 1\n", g)
    with pytest.raises(UnknownEdge):
        parse_system("system 0 1\npath 0 : 5\n", g)
    s = PathSystem(g, 0, 1, (OrientedPath(1, (0,)),))
    with pytest.raises(MixedEndpoints):
        s.vertex_seqs


def test_loops_rejected():
    with pytest.raises(ValueError):
        MultiGraph(2, ((1, 1),))
