import random

from hypothesis import given, strategies as st

from ocpaths.flow import Network, decompose


def test_max_flow_diamond():
    net = Network(4)
    for u, v in ((0, 1), (0, 2), (1, 3), (2, 3), (1, 2)):
        net.add_arc(u, v, 1)
    assert net.max_flow(0, 3) == 2
    assert 3 not in net.reachable(0)


def test_limit_stops_early():
    net = Network(2)
    for _ in range(5):
        net.add_arc(0, 1, 1)
    assert net.max_flow(0, 1, limit=3) == 3


def test_min_cost_prefers_short_routes():
    net = Network(4)
    net.add_arc(0, 3, 1, 5, tag="long")
    net.add_arc(0, 1, 1, 1, tag="a")
    net.add_arc(1, 3, 1, 1, tag="b")
    assert net.min_cost_flow(0, 3, 1) == (1, 2)
    net2 = Network(4)
    net2.add_arc(0, 3, 1, 5)
    net2.add_arc(0, 1, 1, 1)
    net2.add_arc(1, 3, 1, 1)
    assert net2.min_cost_flow(0, 3, 5) == (2, 7)


def test_decompose_drops_cycles():
    # unit flow 0->1->2->3 plus a circulation 1->4->1
    units = [(0, 1, "a"), (1, 2, "b"), (2, 3, "c"), (1, 4, "x"), (4, 1, "y")]
    paths = decompose(units, 0, 3, 1)
    assert len(paths) == 1
    assert paths[0].nodes[0] == 0 and paths[0].nodes[-1] == 3
    assert set(paths[0].tags) <= {"a", "b", "c", "x", "y"}


@given(st.integers(0, 10_000))
def test_decomposition_respects_units(seed):
    rng = random.Random(seed)
    width = rng.randint(1, 4)
    units = []
    for i in range(width):
        units += [(0, 10 + i, ("p", i, 0)), (10 + i, 1, ("p", i, 1))]
    rng.shuffle(units)
    paths = decompose(units, 0, 1, width, rng)
    assert len(paths) == width
    used = [t for p in paths for t in p.tags]
    assert sorted(used) == sorted(t for *_, t in units)
