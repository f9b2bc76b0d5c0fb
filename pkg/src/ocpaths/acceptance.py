"""The acceptance sweep: eight seeded checks, each returning a CriterionResult.

Used by ``ocpaths corpus`` and by the acceptance test module. Every runner
is deterministic for a given ``seed``.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations, permutations

from .backbone import auxiliary_graph, extract_backbone, lift, weave
from .compose import compose
from .connectivity import kappa_e, kappa_v, min_internal_separator
from .dirac import dirac_system
from .gen import (
    CONCAT_VIOLATIONS,
    gen_compose_scenario,
    gen_concat_quadruple,
    gen_lift_instance,
    gen_planted_backbone,
    gen_random_multigraph,
    gen_weave_config,
)
from .errors import HypothesisViolated
from .graph import MultiGraph, PathSystem
from .oracle import brute_kappa_E, brute_kappa_V, brute_max_oc
from .order import concatenate_pair, verify_system


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    time_limit: float | None = None

    @property
    def within_time(self) -> bool:
        return self.time_limit is None or self.seconds < self.time_limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        limit = f" (limit {self.time_limit:.0f}s)" if self.time_limit else ""
        return f"[{status}] {self.number}. {self.name}: {self.detail}; {self.seconds:.1f}s{limit}"


def random_small_graph(rng: random.Random, max_n: int = 7, max_m: int = 12, max_mult: int = 3) -> MultiGraph:
    n = rng.randint(2, max_n)
    mult = rng.randint(1, max_mult)
    m = rng.randint(0, min(max_m, mult * n * (n - 1) // 2))
    return gen_random_multigraph(n, m, mult, rng.randrange(2**32))


def _separates(g: MultiGraph, a: int, b: int, removed: frozenset[int]) -> bool:
    seen, stack = {a}, [a]
    while stack:
        x = stack.pop()
        for e in g.incidence[x]:
            y = g.other(e, x)
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return b not in seen


# -- 1 ------------------------------------------------------------------------


def finite_dirac(seed: int = 1, instances: int = 300) -> tuple[bool, str]:
    rng = random.Random(seed)
    pairs = bad = 0
    for _ in range(instances):
        g = random_small_graph(rng)
        for a, b in permutations(g.vertices(), 2):
            flow, _ = kappa_e(g, a, b)
            if flow == 0:
                continue
            pairs += 1
            ke = brute_kappa_E(g, a, b)
            oc, witness = brute_max_oc(g, a, b)
            if not (oc == ke == flow and verify_system(witness).ok):
                bad += 1
    return bad == 0, f"{pairs} pairs on {instances} graphs, {bad} mismatches"


# -- 2 ------------------------------------------------------------------------


def _connected_pair(g: MultiGraph, rng: random.Random) -> tuple[int, int, int] | None:
    order = list(combinations(g.vertices(), 2))
    rng.shuffle(order)
    for a, b in order:
        k, _ = kappa_e(g, a, b)
        if k:
            return a, b, k
    return None


def minimal_systems(seed: int = 2, instances: int = 1000, reruns: int = 100, rerun_instances: int = 10) -> tuple[bool, str]:
    rng = random.Random(seed)
    done = bad = 0
    rerun_pool = []
    while done < instances:
        g = random_small_graph(rng, max_n=30, max_m=80)
        found = _connected_pair(g, rng)
        if found is None:
            continue
        a, b, k = found
        done += 1
        if not verify_system(dirac_system(g, a, b, k).system).ok:
            bad += 1
        if len(rerun_pool) < rerun_instances and k >= 2:
            rerun_pool.append((g, a, b, k))
    for i, (g, a, b, k) in enumerate(rerun_pool):
        for r in range(reruns):
            if not verify_system(dirac_system(g, a, b, k, seed=seed * 100_000 + i * reruns + r).system).ok:
                bad += 1
    total = instances + len(rerun_pool) * reruns
    return bad == 0, f"{total} systems ({len(rerun_pool)}x{reruns} reruns), {bad} failed verification"


# -- 3 ------------------------------------------------------------------------


def concatenation_suite(seed: int = 3, good: int = 1000, violated: int = 200) -> tuple[bool, str]:
    bad_good = bad_viol = 0
    for i in range(good):
        q = gen_concat_quadruple(seed * 1_000_000 + i)
        try:
            x, x2 = concatenate_pair(q.graph, *q.legs)
        except HypothesisViolated:
            bad_good += 1
            continue
        s = PathSystem(q.graph, x.start, x.end(q.graph), (x, x2))
        if not verify_system(s).ok:
            bad_good += 1
    for i in range(violated):
        kind = CONCAT_VIOLATIONS[i % len(CONCAT_VIOLATIONS)]
        q = gen_concat_quadruple(seed * 1_000_000 + good + i, violate=kind)
        try:
            concatenate_pair(q.graph, *q.legs)
            bad_viol += 1
        except HypothesisViolated as exc:
            if exc.condition != kind:
                bad_viol += 1
    ok = bad_good == 0 and bad_viol == 0
    return ok, f"{good} valid ({bad_good} failed), {violated} violated ({bad_viol} misreported)"


# -- 4 ------------------------------------------------------------------------


def backbone_recovery(seed: int = 4, instances: int = 100) -> tuple[bool, str]:
    rng = random.Random(seed)
    problems: list[str] = []
    for i in range(instances):
        segs, width, length = rng.randint(1, 5), rng.randint(2, 20), rng.randint(1, 4)
        inst = gen_planted_backbone(segs, width, length, rng.randrange(2**32))
        g, fam = inst.graph, inst.systems["family"]
        bb = extract_backbone(g, fam, tau=width)
        if list(bb.vertices) != inst.planted["backbone"]:
            problems.append(f"#{i} backbone {bb.vertices}")
        floors = [kappa_v(g, x, y)[0] for x, y in zip(bb.vertices, bb.vertices[1:])]
        if floors != list(bb.floors) or min(floors) < width:
            problems.append(f"#{i} floors {floors}")
        if len(bb.survivors) < bb.pigeonhole_bound:
            problems.append(f"#{i} pigeonhole {len(bb.survivors)} < {bb.pigeonhole_bound}")
        if len(bb.vertices) - 1 > max(len(p) for p in fam):
            problems.append(f"#{i} backbone longer than the family paths")
        for seq in bb.survivors.vertex_seqs:
            pos = [seq.index(t) if t in seq else -1 for t in bb.vertices]
            if -1 in pos or pos != sorted(pos):
                problems.append(f"#{i} survivor out of order")
                break
    return not problems, f"{instances} planted instances, {len(problems)} problems" + (
        f" (first: {problems[0]})" if problems else "")


# -- 5 ------------------------------------------------------------------------


def weave_sufficiency(seed: int = 5, instances: int = 100) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(instances):
        segs, r, length = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 3)
        inst = gen_weave_config(segs, r, length, rng.randrange(2**32), slack=rng.randint(0, 2))
        bb = inst.planted["backbone"]
        fams = [inst.systems[f"seg{i}"] for i in range(segs)]
        out = weave(inst.graph, bb, fams, r)
        seqs = out.vertex_seqs
        ok = len(out) == r and verify_system(out).ok
        ok = ok and all(set(p) & set(q) == set(bb) for p, q in combinations(seqs, 2))
        bad += not ok
    return bad == 0, f"{instances} configurations, {bad} failed"


# -- 6 ------------------------------------------------------------------------


def compose_recovery(seed: int = 6, per_kind: int = 40) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad: list[str] = []
    runs = 0
    for kind in ("terminal_rich", "terminal_free"):
        for _ in range(per_kind):
            k = rng.randint(1, 50)
            inst = gen_compose_scenario(kind, k, 1, rng.randrange(2**32))
            out = compose(inst.systems["P"], inst.systems["Q"])
            runs += 1
            if len(out) != k or not verify_system(out).ok:
                bad.append(f"{kind} k={k} got {len(out)}")
    for _ in range(per_kind):
        depth = rng.randint(1, 6)
        width = rng.randint(max(1, depth // 2), 8)
        inst = gen_compose_scenario("cascade", width, depth, rng.randrange(2**32))
        out = compose(inst.systems["P"], inst.systems["Q"])
        runs += 1
        if len(out) < depth // 2 or not verify_system(out).ok:
            bad.append(f"cascade d={depth} w={width} got {len(out)}")
    return not bad, f"{runs} scenarios, {len(bad)} failed" + (f" (first: {bad[0]})" if bad else "")


# -- 7 ------------------------------------------------------------------------


def connectivity_crosscheck(seed: int = 7, instances: int = 100, aux_pairs: int = 20) -> tuple[bool, str]:
    rng = random.Random(seed)
    problems = 0
    pairs_checked = aux_checked = 0
    for _ in range(instances):
        g = random_small_graph(rng)
        for a, b in combinations(g.vertices(), 2):
            pairs_checked += 1
            kv, ke = kappa_v(g, a, b)[0], kappa_e(g, a, b)[0]
            if kv > ke:
                problems += 1
            if not g.adjacent(a, b):
                sep = min_internal_separator(g, a, b)
                if len(sep) != kv or not _separates(g, a, b, sep.vertices):
                    problems += 1
        theta = rng.randint(1, 3)
        aux = auxiliary_graph(g, theta)
        all_pairs = list(combinations(g.vertices(), 2))
        for x, y in (rng.choice(all_pairs) for _ in range(aux_pairs)):
            aux_checked += 1
            if aux.has_edge(x, y) != (brute_kappa_V(g, x, y) >= theta):
                problems += 1
    return problems == 0, (
        f"{pairs_checked} pairs, {aux_checked} auxiliary memberships re-derived, {problems} problems")


# -- 8 ------------------------------------------------------------------------


def lift_avoidance(seed: int = 8, instances: int = 50) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(instances):
        inst = gen_lift_instance(rng.randint(1, 3), rng.randint(2, 6), rng.randint(1, 3),
                                 rng.randrange(2**32), noise=rng.randint(0, 5))
        p = inst.planted
        fv, fe = set(p["forbidden_vertices"]), set(p["forbidden_edges"])
        out = lift(inst.graph, p["backbone"], fv, fe, p["r"], p["theta"])
        ok = len(out) >= 1 and verify_system(out).ok
        for path, seq in zip(out.paths, out.vertex_seqs):
            pos = [seq.index(t) if t in seq else -1 for t in p["backbone"]]
            ok = ok and not fv.intersection(seq) and not fe.intersection(path.edges)
            ok = ok and -1 not in pos and pos == sorted(pos)
        bad += not ok
    return bad == 0, f"{instances} instances, {bad} failed"


CRITERIA: tuple[tuple[int, str, Callable[[], tuple[bool, str]], float | None], ...] = (
    (1, "finite Dirac equality", finite_dirac, 120.0),
    (2, "minimal systems are order-compatible", minimal_systems, 60.0),
    (3, "concatenation property suite", concatenation_suite, None),
    (4, "backbone extraction", backbone_recovery, 60.0),
    (5, "weave sufficiency", weave_sufficiency, None),
    (6, "compose soundness and planted recovery", compose_recovery, 120.0),
    (7, "connectivity cross-checks", connectivity_crosscheck, None),
    (8, "lift avoidance", lift_avoidance, None),
)


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn, limit in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(num, name, passed, detail, time.perf_counter() - start, limit)
    raise KeyError(number)


def run_all(numbers: list[int] | None = None) -> list[CriterionResult]:
    return [run_criterion(n) for n, *_ in CRITERIA if numbers is None or n in numbers]
