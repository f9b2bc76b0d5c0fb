import pytest
from hypothesis import given, settings, strategies as st

from ocpaths.connectivity import kappa_v
from ocpaths.errors import BadParameters
from ocpaths.gen import (
    SCENARIOS, gen_compose_scenario, gen_lift_instance, gen_planted_backbone, gen_random_multigraph,
    gen_weave_config, verify_planted,
)
from ocpaths.graph import format_graph, parse_graph
from ocpaths.order import verify_system


def test_random_is_deterministic():
    a = format_graph(gen_random_multigraph(5, 8, 2, 1))
    assert a == format_graph(gen_random_multigraph(5, 8, 2, 1))
    assert parse_graph(a).edge_count == 8


@given(st.integers(2, 8), st.integers(1, 3), st.integers(0, 10_000), st.data())
def test_random_respects_multiplicity(n, mult, seed, data):
    m = data.draw(st.integers(0, mult * n * (n - 1) // 2))
    g = gen_random_multigraph(n, m, mult, seed)
    assert g.edge_count == m
    pairs = [tuple(sorted(e)) for e in g.edges]
    assert max((pairs.count(p) for p in pairs), default=0) <= mult


def test_random_edge_cases():
    assert gen_random_multigraph(4, 0, 1, 3).edges == ()
    g = gen_random_multigraph(5, 10, 1, 3)
    assert len({tuple(sorted(e)) for e in g.edges}) == 10
    for args in ((1, 0, 1), (3, -1, 1), (3, 1, 0), (3, 4, 1)):
        with pytest.raises(BadParameters):
            gen_random_multigraph(*args, 0)


def test_planted_backbone_examples():
    g = gen_planted_backbone(1, 4, 1, 7).graph
    assert g.vertex_count == 2 and g.edge_count == 4
    inst = gen_planted_backbone(2, 3, 2, 7)
    a, s, b = inst.planted["backbone"]
    assert kappa_v(inst.graph, a, s)[0] == 3 and kappa_v(inst.graph, s, b)[0] == 3
    inst = gen_planted_backbone(3, 4, 2, 7)
    bb = inst.planted["backbone"]
    assert len(bb) == 4
    assert all(kappa_v(inst.graph, x, y)[0] >= 4 for x, y in zip(bb, bb[1:]))
    with pytest.raises(BadParameters):
        gen_planted_backbone(0, 1, 1, 0)


@pytest.mark.parametrize("kind", SCENARIOS)
def test_scenarios_are_deterministic_and_verified(kind):
    one = gen_compose_scenario(kind, 5, 3, 11)
    two = gen_compose_scenario(kind, 5, 3, 11)
    assert one.emit() == two.emit()
    for s in one.systems.values():
        assert verify_system(s).ok
    verify_planted(one)


def test_scenario_errors():
    with pytest.raises(BadParameters):
        gen_compose_scenario("spiral", 3)
    with pytest.raises(BadParameters):
        gen_compose_scenario("cascade", 0, 2)


def test_meta_lines():
    inst = gen_compose_scenario("cascade", 2, 2, 0)
    graph_text, meta, systems = inst.emit()
    assert parse_graph(graph_text) == inst.graph
    assert set(systems) == {"P", "Q"}
    assert f"meta c {inst.roles['c']}" in meta.splitlines()
    assert "meta kind cascade" in meta.splitlines()
    assert all(line.startswith("meta ") for line in meta.splitlines())


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(2, 6), st.integers(1, 3), st.integers(0, 10_000), st.integers(0, 4))
def test_lift_instances_stay_below_threshold(segments, width, length, seed, noise):
    inst = gen_lift_instance(segments, width, length, seed, noise)
    p = inst.planted
    assert len(p["forbidden_vertices"]) + len(p["forbidden_edges"]) < p["theta"]
    assert not set(p["forbidden_vertices"]) & set(p["backbone"])
    assert 1 <= p["r"] <= p["theta"]


def test_weave_config_width():
    inst = gen_weave_config(3, 2, 2, seed=4, slack=1)
    assert inst.planted["width"] == 2 * 3 * 2 + 2
    assert all(len(inst.systems[f"seg{i}"]) == inst.planted["width"] for i in range(3))
