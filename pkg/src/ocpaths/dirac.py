"""Maximum families of edge-disjoint, pairwise order-compatible paths.

On a finite graph, any k edge-disjoint a-b paths with the fewest total edges
are pairwise order-compatible. For edge-disjoint families the size of the
edge union equals the sum of path lengths, so a unit-cost min-cost flow of
value k produces such a family directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .connectivity import kappa_e, min_total_edge_system
from .errors import MinimalityBreach
from .graph import MultiGraph, PathSystem
from .order import verify_system


@dataclass(frozen=True)
class DiracResult:
    system: PathSystem
    total_edges: int
    flow_cost: int

    def __len__(self) -> int:
        return len(self.system)


def dirac_system(g: MultiGraph, a: int, b: int, k: int, seed: int | None = None) -> DiracResult:
    """``k`` edge-disjoint, pairwise order-compatible a-b paths of least total length.

    ``seed`` randomises the tie-breaks of the flow decomposition; every
    decomposition of a minimum-cost flow must still verify.

    Raises Infeasible when fewer than ``k`` edge-disjoint paths exist and
    MinimalityBreach if the minimal family fails verification.
    """
    rng = None if seed is None else random.Random(seed)
    system = min_total_edge_system(g, a, b, k, rng=rng)
    total = system.total_edges()
    report = verify_system(system)
    if not report.ok:
        raise MinimalityBreach(f"minimal system failed verification: {report.certificate}")
    return DiracResult(system, total, total)


def max_oc_system(g: MultiGraph, a: int, b: int, seed: int | None = None) -> DiracResult:
    k, _ = kappa_e(g, a, b)
    if k == 0:
        return DiracResult(PathSystem(g, a, b), 0, 0)
    return dirac_system(g, a, b, k, seed=seed)
