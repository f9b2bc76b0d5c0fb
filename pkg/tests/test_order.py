import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ocpaths.errors import HypothesisViolated, MixedEndpoints
from ocpaths.gen import CONCAT_VIOLATIONS, gen_concat_quadruple
from ocpaths.graph import MultiGraph, OrientedPath, PathSystem
from ocpaths.order import (
    InversionCertificate, SharedEdgeCertificate, check_concatenation, concatenate, concatenate_pair,
    find_inversion, is_order_compatible, parse_certificate, recheck_certificate, verify_system,
)

from conftest import crossing_graph, crossing_pair, parallel


def brute_inversions(p, q):
    common = set(p) & set(q)
    return [(x, y) for x, y in itertools.permutations(common, 2)
            if p.index(x) < p.index(y) and q.index(y) < q.index(x)]


def test_self_and_crossing():
    g = crossing_graph()
    s = crossing_pair(g)
    assert is_order_compatible(g, s[0], s[0]) == (True, None)
    ok, cert = is_order_compatible(g, s[0], s[1])
    assert not ok and (cert.x, cert.y) == (1, 2)
    assert cert.to_line() == "inv 1 2 0 1"


def test_disjoint_interiors_compatible():
    g = parallel(2)
    s = PathSystem(g, 0, 1, (OrientedPath(0, (0,)), OrientedPath(0, (1,))))
    assert verify_system(s).ok and verify_system(s).certificate is None


def test_verify_reports():
    g = crossing_graph()
    rep = verify_system(crossing_pair(g))
    assert rep.edge_disjoint and not rep.order_compatible
    assert isinstance(rep.certificate, InversionCertificate)
    assert recheck_certificate(crossing_pair(g), rep.certificate)
    shared = PathSystem(g, 0, 3, (OrientedPath(0, (0, 2, 5)), OrientedPath(0, (0, 4))))
    rep = verify_system(shared)
    assert not rep.edge_disjoint and rep.certificate == SharedEdgeCertificate(0, 0, 1)
    assert rep.certificate.to_line() == "sharededge 0 0 1"
    mixed = PathSystem(g, 0, 3, (OrientedPath(0, (0,)),))
    with pytest.raises(MixedEndpoints):
        verify_system(mixed)


def test_certificate_parsing():
    assert parse_certificate("inv 1 2 0 1") == InversionCertificate(1, 2, 0, 1)
    assert parse_certificate("sharededge 3 0 2") == SharedEdgeCertificate(3, 0, 2)
    with pytest.raises(ValueError):
        parse_certificate("inv 1 2")
    assert not recheck_certificate(crossing_pair(crossing_graph()), InversionCertificate(2, 1, 0, 1))


vertex_lists = st.lists(st.integers(0, 9), unique=True, max_size=10)


@given(vertex_lists, vertex_lists)
def test_find_inversion_matches_brute_force(p, q):
    inv = find_inversion(p, q)
    found = brute_inversions(p, q)
    assert (inv is None) == (not found)
    if inv is not None:
        assert inv in found
        # earliest y along q, then earliest x after it
        assert min(found, key=lambda t: (q.index(t[1]), q.index(t[0]))) == inv
        assert find_inversion(q, p) is not None


@given(vertex_lists, vertex_lists)
def test_small_intersection_is_compatible(p, q):
    if len(set(p) & set(q)) <= 1:
        assert find_inversion(p, q) is None


def test_star_concatenation():
    # a=0, b=1, c=2; four legs through fresh vertices 3..6
    g = MultiGraph(7, ((0, 3), (3, 1), (0, 4), (4, 1), (1, 5), (5, 2), (1, 6), (6, 2)))
    x, x2 = concatenate_pair(g, OrientedPath(0, (0, 1)), OrientedPath(0, (2, 3)),
                             OrientedPath(1, (4, 5)), OrientedPath(1, (6, 7)))
    assert x == OrientedPath(0, (0, 1, 4, 5)) and x2 == OrientedPath(0, (2, 3, 6, 7))
    assert concatenate(g, OrientedPath(0, (0, 1)), OrientedPath(1, (4, 5))) == x


def test_reentry_names_intersection_at_u():
    # aPu = 0-3-1 and uQc = 1-4-3-2 share the interior vertex 3
    g = MultiGraph(6, ((0, 3), (3, 1), (1, 4), (4, 3), (3, 2), (0, 5), (5, 1), (1, 2)))
    with pytest.raises(HypothesisViolated) as err:
        check_concatenation(g, OrientedPath(0, (0, 1)), OrientedPath(0, (5, 6)),
                            OrientedPath(1, (2, 3, 4)), OrientedPath(1, (7,)))
    assert err.value.condition == "intersection-at-u"


@settings(max_examples=300)
@given(st.integers(0, 2**32 - 1))
def test_generated_quadruples_concatenate(seed):
    q = gen_concat_quadruple(seed)
    x, x2 = concatenate_pair(q.graph, *q.legs)
    s = PathSystem(q.graph, x.start, x.end(q.graph), (x, x2))
    assert verify_system(s).ok


@settings(max_examples=300)
@given(st.integers(0, 2**32 - 1), st.sampled_from(CONCAT_VIOLATIONS))
def test_violations_are_named(seed, kind):
    q = gen_concat_quadruple(seed, kind)
    with pytest.raises(HypothesisViolated) as err:
        concatenate_pair(q.graph, *q.legs)
    assert err.value.condition == kind


def test_endpoint_mismatch_is_named():
    g = parallel(3)
    with pytest.raises(HypothesisViolated) as err:
        check_concatenation(g, OrientedPath(0, (0,)), OrientedPath(0, (1,)),
                            OrientedPath(0, ()), OrientedPath(1, ()))
    assert err.value.condition == "endpoints"
