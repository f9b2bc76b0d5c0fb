"""Order-compatibility, system verification, and guarded concatenation.

Two oriented paths are order-compatible when the vertices they share appear
in the same relative order along both. The predicate is defined for paths
with arbitrary endpoints, which is what prefix comparisons need.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import EndpointMismatch, HypothesisViolated, ParseError, SoundnessBreach
from .graph import MultiGraph, OrientedPath, PathSystem, validate_path


@dataclass(frozen=True)
class InversionCertificate:
    """``first_path`` visits ``x`` before ``y``; ``second_path`` visits ``y`` before ``x``."""

    x: int
    y: int
    first_path: int
    second_path: int

    def to_line(self) -> str:
        return f"inv {self.x} {self.y} {self.first_path} {self.second_path}"


@dataclass(frozen=True)
class SharedEdgeCertificate:
    edge: int
    first_path: int
    second_path: int

    def to_line(self) -> str:
        return f"sharededge {self.edge} {self.first_path} {self.second_path}"


Certificate = InversionCertificate | SharedEdgeCertificate


@dataclass(frozen=True)
class VerificationReport:
    edge_disjoint: bool
    order_compatible: bool
    certificate: Certificate | None = None

    @property
    def ok(self) -> bool:
        return self.edge_disjoint and self.order_compatible


def find_inversion(pv: Sequence[int], qv: Sequence[int]) -> tuple[int, int] | None:
    """First inversion between two vertex sequences, or None.

    Returns ``(x, y)`` with ``x`` before ``y`` on ``pv`` and ``y`` before
    ``x`` on ``qv``. Among all inversions, ``y`` is the earliest possible
    along ``qv`` and then ``x`` the earliest after it. Linear time.
    """
    pos = {v: i for i, v in enumerate(pv)}
    common = [(v, pos[v]) for v in qv if v in pos]
    if len(common) < 2:
        return None
    # suffix minima of p-positions along q
    suffix_min = [0] * len(common)
    running = len(pv)
    for i in range(len(common) - 1, -1, -1):
        running = min(running, common[i][1])
        suffix_min[i] = running
    for i in range(len(common) - 1):
        y, py = common[i]
        if suffix_min[i + 1] < py:
            for x, px in common[i + 1:]:
                if px < py:
                    return x, y
    return None


def is_order_compatible(g: MultiGraph, p: OrientedPath, q: OrientedPath,
                        indices: tuple[int, int] = (0, 1)) -> tuple[bool, InversionCertificate | None]:
    """Check ``p`` and ``q`` for order-compatibility.

    On failure the certificate names ``p`` and ``q`` by ``indices``.
    """
    inv = find_inversion(validate_path(g, p), validate_path(g, q))
    if inv is None:
        return True, None
    return False, InversionCertificate(inv[0], inv[1], indices[0], indices[1])


def _shared_edge(e1: Sequence[int], e2: Sequence[int]) -> int | None:
    common = set(e1).intersection(e2)
    return min(common) if common else None


def verify_system(s: PathSystem) -> VerificationReport:
    """Check edge-disjointness and pairwise order-compatibility of ``s``.

    The certificate describes the first failing pair ``(i, j)`` in
    lexicographic index order; a shared edge takes precedence over an
    inversion within that pair.
    """
    seqs = s.vertex_seqs  # raises MixedEndpoints / InvalidPath
    owner: dict[int, int] = {}
    edge_disjoint = True
    for i, p in enumerate(s.paths):
        for e in p.edges:
            if e in owner and owner[e] != i:
                edge_disjoint = False
            owner.setdefault(e, i)

    order_compatible = True
    certificate: Certificate | None = None
    for i in range(len(seqs)):
        for j in range(i + 1, len(seqs)):
            shared = None if edge_disjoint else _shared_edge(s.paths[i].edges, s.paths[j].edges)
            inv = find_inversion(seqs[i], seqs[j])
            if inv is not None:
                order_compatible = False
            if certificate is None:
                if shared is not None:
                    certificate = SharedEdgeCertificate(shared, i, j)
                elif inv is not None:
                    certificate = InversionCertificate(inv[0], inv[1], i, j)
    return VerificationReport(edge_disjoint, order_compatible, certificate)


def recheck_certificate(s: PathSystem, cert: Certificate) -> bool:
    """True iff ``cert`` genuinely witnesses a defect of ``s``."""
    n = len(s.paths)
    if not (0 <= cert.first_path < n and 0 <= cert.second_path < n) or cert.first_path == cert.second_path:
        return False
    if isinstance(cert, SharedEdgeCertificate):
        return cert.edge in s.paths[cert.first_path].edges and cert.edge in s.paths[cert.second_path].edges
    p, q = s.vertex_seqs[cert.first_path], s.vertex_seqs[cert.second_path]
    if not {cert.x, cert.y} <= set(p) & set(q) or cert.x == cert.y:
        return False
    return p.index(cert.x) < p.index(cert.y) and q.index(cert.y) < q.index(cert.x)


def parse_certificate(line: str) -> Certificate:
    toks = line.split()
    try:
        if toks[0] == "inv" and len(toks) == 5:
            return InversionCertificate(*map(int, toks[1:]))
        if toks[0] == "sharededge" and len(toks) == 4:
            return SharedEdgeCertificate(*map(int, toks[1:]))
    except (ValueError, IndexError):
        pass
    raise ParseError(f"not a certificate line: {line!r}")


# -- concatenation ------------------------------------------------------------

CONCAT_CONDITIONS = (
    "endpoints",
    "prefix-pair",
    "suffix-pair",
    "intersection-at-u",
    "intersection-at-v",
    "cross-u",
    "cross-v",
)


def check_concatenation(g: MultiGraph, a_p_u: OrientedPath, a_p2_v: OrientedPath,
                        u_q_c: OrientedPath, v_q2_c: OrientedPath) -> None:
    """Raise HypothesisViolated naming the first failed precondition.

    The conditions, in order: shared start ``a`` and end ``c`` with ``a != c``
    and matching joints; both prefixes edge-disjoint and order-compatible;
    both suffixes likewise; each prefix meets its own suffix only at the
    joint; each prefix meets the other suffix at most in its own joint.
    """
    P, P2, Q, Q2 = (validate_path(g, x) for x in (a_p_u, a_p2_v, u_q_c, v_q2_c))
    a, u, v, c = P[0], P[-1], P2[-1], Q[-1]
    if P2[0] != a or Q[0] != u or Q2[0] != v or Q2[-1] != c or a == c:
        raise HypothesisViolated("endpoints", "legs do not chain as a-u-c / a-v-c")
    for name, (x, y, ex, ey) in (
        ("prefix-pair", (P, P2, a_p_u.edges, a_p2_v.edges)),
        ("suffix-pair", (Q, Q2, u_q_c.edges, v_q2_c.edges)),
    ):
        shared = _shared_edge(ex, ey)
        if shared is not None:
            raise HypothesisViolated(name, f"edge {shared} used twice")
        inv = find_inversion(x, y)
        if inv is not None:
            raise HypothesisViolated(name, f"inversion on {inv}")
    if set(P) & set(Q) != {u}:
        raise HypothesisViolated("intersection-at-u", f"extra common vertices {sorted(set(P) & set(Q) - {u})}")
    if set(P2) & set(Q2) != {v}:
        raise HypothesisViolated("intersection-at-v", f"extra common vertices {sorted(set(P2) & set(Q2) - {v})}")
    if not set(P) & set(Q2) <= {u}:
        raise HypothesisViolated("cross-u", f"common vertices {sorted(set(P) & set(Q2) - {u})}")
    if not set(P2) & set(Q) <= {v}:
        raise HypothesisViolated("cross-v", f"common vertices {sorted(set(P2) & set(Q) - {v})}")


def concatenate_pair(g: MultiGraph, a_p_u: OrientedPath, a_p2_v: OrientedPath,
                     u_q_c: OrientedPath, v_q2_c: OrientedPath) -> tuple[OrientedPath, OrientedPath]:
    """Join ``aPu`` with ``uQc`` and ``aP'v`` with ``vQ'c``.

    All preconditions are checked first (see :func:`check_concatenation`);
    the two resulting a-c paths are then re-verified to be distinct,
    edge-disjoint and order-compatible.
    """
    check_concatenation(g, a_p_u, a_p2_v, u_q_c, v_q2_c)
    x = OrientedPath(a_p_u.start, a_p_u.edges + u_q_c.edges)
    x2 = OrientedPath(a_p2_v.start, a_p2_v.edges + v_q2_c.edges)
    xs, x2s = validate_path(g, x), validate_path(g, x2)
    if x == x2 or _shared_edge(x.edges, x2.edges) is not None or find_inversion(xs, x2s) is not None:
        raise SoundnessBreach("concatenations are not distinct, edge-disjoint and order-compatible")
    return x, x2


def concatenate(g: MultiGraph, prefix: OrientedPath, suffix: OrientedPath) -> OrientedPath:
    if prefix.end(g) != suffix.start:
        raise EndpointMismatch(f"prefix ends at {prefix.end(g)}, suffix starts at {suffix.start}")
    return prefix.concat(g, suffix)
