import pytest
from hypothesis import given, settings, strategies as st

from ocpaths.dirac import dirac_system, max_oc_system
from ocpaths.errors import Infeasible
from ocpaths.graph import MultiGraph
from ocpaths.gen import gen_random_multigraph
from ocpaths.oracle import brute_max_oc
from ocpaths.order import verify_system

from conftest import crossing_graph, graph_with_pair, parallel, theta_graph
from test_connectivity import brute_min_total


def test_crossing():
    r = dirac_system(crossing_graph(), 0, 3, 2)
    assert r.total_edges == r.flow_cost == 4
    assert sorted(r.system.vertex_seqs) == [(0, 1, 3), (0, 2, 3)]
    assert verify_system(r.system).ok


def test_parallel_and_infeasible():
    r = dirac_system(parallel(3), 0, 1, 3)
    assert r.total_edges == 3 and len(r) == 3
    with pytest.raises(Infeasible):
        dirac_system(parallel(3), 0, 1, 4)


def test_max_oc_examples():
    assert len(max_oc_system(crossing_graph(), 0, 3)) == 2
    assert len(max_oc_system(theta_graph(), 0, 1)) == 3
    assert len(max_oc_system(MultiGraph(3, ((0, 1),)), 0, 2)) == 0


@settings(max_examples=100, deadline=None)
@given(graph_with_pair(max_n=6, max_m=10))
def test_max_oc_matches_oracle(case):
    g, a, b = case
    r = max_oc_system(g, a, b)
    assert len(r) == brute_max_oc(g, a, b)[0]
    if len(r):
        assert r.total_edges == brute_min_total(g, a, b, len(r))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(6, 30))
def test_every_tie_break_verifies(seed, n):
    g = gen_random_multigraph(n, min(80, 3 * n), 3, seed)
    r0 = max_oc_system(g, 0, 1)
    for s in range(10):
        r = max_oc_system(g, 0, 1, seed=s)
        assert verify_system(r.system).ok
        assert r.total_edges == r0.total_edges
