import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from ocpaths.backbone import auxiliary_graph, extract_backbone, lift, weave
from ocpaths.connectivity import kappa_v
from ocpaths.errors import (
    BadParameters, BadSegmentFamily, EmptyFamily, ForbiddenTooLarge, NotEdgeDisjoint, SegmentBlocked,
)
from ocpaths.gen import gen_planted_backbone, gen_weave_config
from ocpaths.graph import MultiGraph, OrientedPath, PathSystem
from ocpaths.oracle import brute_kappa_V
from ocpaths.order import verify_system

from conftest import multigraphs, parallel


def fan(k: int, length: int = 2) -> tuple[MultiGraph, PathSystem]:
    """``k`` internally disjoint 0-1 paths of ``length`` edges."""
    inst = gen_planted_backbone(1, k, length, seed=0)
    return inst.graph, inst.systems["family"]


@pytest.mark.parametrize("k", [2, 3, 6])
def test_bowtie_family(k):
    inst = gen_planted_backbone(2, k, 2, seed=k)
    bb = extract_backbone(inst.graph, inst.systems["family"], tau=k)
    assert list(bb.vertices) == inst.planted["backbone"]
    assert len(bb.survivors) == k
    assert all(f >= k for f in bb.floors)
    assert [len(s) for s in bb.separators_used] == [1]
    a, s, b = bb.vertices
    assert kappa_v(inst.graph, a, s)[0] == k


def test_disjoint_family_is_its_own_backbone():
    g, fam = fan(4, 3)
    bb = extract_backbone(g, fam, tau=4)
    assert bb.vertices == (fam.source, fam.sink)
    assert bb.survivors == fam and bb.separators_used == ()


def test_single_path_uses_adjacency():
    g = MultiGraph(3, ((0, 1), (1, 2)))
    fam = PathSystem(g, 0, 2, (OrientedPath(0, (0, 1)),))
    bb = extract_backbone(g, fam, tau=5)
    assert bb.vertices == (0, 1, 2)
    assert bb.floors == (1, 1)
    assert bb.to_line() == "backbone 0 1 2 ; floors 1 1"


def test_three_segment_floors():
    inst = gen_planted_backbone(3, 4, 2, seed=9)
    bb = extract_backbone(inst.graph, inst.systems["family"], tau=4)
    assert len(bb.vertices) == 4
    assert all(kappa_v(inst.graph, x, y)[0] >= 4 for x, y in zip(bb.vertices, bb.vertices[1:]))


def test_backbone_errors():
    g, fam = fan(2)
    with pytest.raises(EmptyFamily):
        extract_backbone(g, fam.with_paths(()), 1)
    with pytest.raises(NotEdgeDisjoint):
        extract_backbone(g, fam.with_paths((fam[0], fam[0])), 1)
    with pytest.raises(BadParameters):
        extract_backbone(g, fam, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 6), st.integers(1, 3), st.integers(1, 8), st.integers(0, 99))
def test_backbone_invariants(segments, width, length, tau, seed):
    inst = gen_planted_backbone(segments, width, length, seed)
    g, fam = inst.graph, inst.systems["family"]
    bb = extract_backbone(g, fam, tau)
    assert list(bb.floors) == [kappa_v(g, x, y)[0] for x, y in zip(bb.vertices, bb.vertices[1:])]
    assert len(bb.survivors) >= math.ceil(len(fam) / math.prod(len(s) for s in bb.separators_used))
    assert len(bb.vertices) - 1 <= max(len(p) for p in fam)
    for seq in bb.survivors.vertex_seqs:
        pos = [seq.index(t) for t in bb.vertices]
        assert pos == sorted(pos)


def test_weave_examples():
    inst = gen_planted_backbone(2, 4, 2, seed=1)
    g, fam = inst.graph, inst.systems["family"]
    a, s, b = inst.planted["backbone"]
    halves = [PathSystem(g, x, y, tuple(p.subpath(g, x, y) for p in fam)) for x, y in ((a, s), (s, b))]
    out = weave(g, (a, s, b), halves, 4)
    assert len(out) == 4 and verify_system(out).ok
    for p, q in itertools.combinations(out.vertex_seqs, 2):
        assert set(p) & set(q) == {a, s, b}
    assert len(weave(g, (a, s, b), halves, 1)) == 1
    short = weave(g, (a, s, b), halves, 9)
    assert len(short) == 4 and verify_system(short).ok


def test_weave_rejects_bad_families():
    g, fam = fan(3)
    with pytest.raises(BadSegmentFamily):
        weave(g, (fam.source, fam.sink), [fam.with_paths((fam[0], fam[0]))], 1)
    with pytest.raises(BadSegmentFamily):
        weave(g, (fam.source, fam.sink), [], 1)
    reversed_fam = PathSystem(g, fam.sink, fam.source, tuple(p.reverse(g) for p in fam))
    with pytest.raises(BadSegmentFamily):
        weave(g, (fam.source, fam.sink), [reversed_fam], 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_weave_sufficiency(segments, r, length, seed):
    inst = gen_weave_config(segments, r, length, seed)
    bb = inst.planted["backbone"]
    out = weave(inst.graph, bb, [inst.systems[f"seg{i}"] for i in range(segments)], r)
    assert len(out) == r and verify_system(out).ok
    for p, q in itertools.combinations(out.vertex_seqs, 2):
        assert set(p) & set(q) == set(bb)


def test_auxiliary_graph_examples():
    path = MultiGraph(3, ((0, 1), (1, 2)))
    assert auxiliary_graph(path, 1).edges == {(0, 1), (0, 2), (1, 2)}
    assert auxiliary_graph(parallel(3), 3).has_edge(1, 0)
    assert auxiliary_graph(path, path.edge_count + 1).edges == frozenset()
    aux = auxiliary_graph(path, 1, restrict=[0, 2])
    assert aux.edges == {(0, 2)} and aux.is_walk([0, 2])
    with pytest.raises(BadParameters):
        auxiliary_graph(path, 0)


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.integers(1, 4))
def test_auxiliary_membership(g, theta):
    aux = auxiliary_graph(g, theta)
    for x, y in itertools.combinations(g.vertices(), 2):
        assert aux.has_edge(x, y) == (brute_kappa_V(g, x, y) >= theta)


def test_lift_full_fan():
    g, fam = fan(5, 2)
    out = lift(g, (fam.source, fam.sink), (), (), 3, 5)
    assert len(out) == 3 and verify_system(out).ok


def test_lift_forbidden_limits():
    g, fam = fan(5, 2)
    a, b = fam.source, fam.sink
    middles = [seq[1] for seq in fam.vertex_seqs]
    with pytest.raises(ForbiddenTooLarge):
        lift(g, (a, b), middles, (), 1, 5)
    out = lift(g, (a, b), middles[:3], (), 5, 5)
    assert len(out) == 2
    assert not set(middles[:3]) & {v for seq in out.vertex_seqs for v in seq}
    edges = [e for p in fam for e in p.edges]
    with pytest.raises(SegmentBlocked):
        lift(g, (a, b), (), edges[::2], 1, 1)


def test_lift_checks_threshold_and_w():
    g, fam = fan(2, 2)
    with pytest.raises(BadParameters):
        lift(g, (fam.source, fam.sink), (), (), 1, 3)
    with pytest.raises(BadParameters):
        lift(g, (fam.source, fam.source), (), (), 1, 1)
