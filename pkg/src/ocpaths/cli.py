"""Command-line entry point: ``ocpaths <command> [flags]``.

Exit codes: 0 success, 1 failed verification (certificate printed),
2 parse or usage error, 3 infeasible request or exceeded limits.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import acceptance
from .backbone import extract_backbone, weave
from .compose import STRATEGIES, build_cascade, compose_best, compose_strategies
from .connectivity import kappa_e, kappa_v, min_internal_separator
from .dirac import dirac_system, max_oc_system
from .errors import InfeasibleError, InputError, OCPathsError, SoundnessBreach
from .gen import (
    CONCAT_VIOLATIONS,
    SCENARIOS,
    PlantedInstance,
    gen_compose_scenario,
    gen_concat_quadruple,
    gen_lift_instance,
    gen_planted_backbone,
    gen_random_multigraph,
    gen_weave_config,
)
from .graph import MultiGraph, PathSystem, format_system, parse_graph, parse_system
from .oracle import DEFAULT_LIMITS, OracleLimits, brute_kappa_E, brute_max_oc, enumerate_paths
from .order import parse_certificate, recheck_certificate, verify_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3
GEN_KINDS = ("random", "backbone", "weave", "lift", "quadruple", *SCENARIOS)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> MultiGraph:
    if args.graph is None:
        raise InputError("--graph is required")
    return parse_graph(_read(args.graph))


def _systems(args, g: MultiGraph, count: int | None = None) -> list[PathSystem]:
    files = args.system or []
    if count is not None and len(files) != count:
        raise InputError(f"expected {count} --system file(s), got {len(files)}")
    return [parse_system(_read(f), g) for f in files]


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(("-" if len(n) == 1 else "--") + n.replace("_", "-") for n in missing)
        raise InputError(f"missing required flag(s): {flags}")


# -- commands -----------------------------------------------------------------


def cmd_check(args) -> int:
    g = _graph(args)
    (s,) = _systems(args, g, 1)
    if args.cert is not None:
        cert = parse_certificate(_read(args.cert).strip())
        genuine = recheck_certificate(s, cert)
        print(f"certificate {'confirmed' if genuine else 'rejected'}: {cert.to_line()}")
        return EXIT_OK if genuine else EXIT_FAIL
    report = verify_system(s)
    print(f"paths {len(s)} edge_disjoint {int(report.edge_disjoint)} order_compatible {int(report.order_compatible)}")
    if report.certificate is not None:
        print(report.certificate.to_line())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_kappa(args) -> int:
    _need(args, "a", "b")
    g = _graph(args)
    ke, we = kappa_e(g, args.a, args.b)
    kv, wv = kappa_v(g, args.a, args.b)
    print(f"kappa_e {ke}")
    print(f"kappa_v {kv}")
    if not g.adjacent(args.a, args.b):
        sep = min_internal_separator(g, args.a, args.b)
        print("separator " + " ".join(map(str, sorted(sep.vertices))))
    if args.witness:
        sys.stdout.write(format_system(we))
        sys.stdout.write(format_system(wv))
    return EXIT_OK


def cmd_dirac(args) -> int:
    _need(args, "a", "b")
    g = _graph(args)
    if args.k is None:
        res = max_oc_system(g, args.a, args.b, seed=args.seed)
    else:
        res = dirac_system(g, args.a, args.b, args.k, seed=args.seed)
    sys.stdout.write(format_system(res.system))
    print(f"# total {res.total_edges}")
    return EXIT_OK


def cmd_backbone(args) -> int:
    _need(args, "tau")
    g = _graph(args)
    (fam,) = _systems(args, g, 1)
    bb = extract_backbone(g, fam, args.tau)
    print(bb.to_line())
    print(f"# survivors {len(bb.survivors)} of {bb.family_size}, pigeonhole bound {bb.pigeonhole_bound}")
    sys.stdout.write(format_system(bb.survivors))
    return EXIT_OK


def cmd_weave(args) -> int:
    _need(args, "backbone", "r")
    g = _graph(args)
    bb = [int(x) for x in args.backbone.replace(",", " ").split()]
    fams = _systems(args, g, max(len(bb) - 1, 0))
    out = weave(g, bb, fams, args.r)
    sys.stdout.write(format_system(out))
    return EXIT_OK if len(out) == args.r else EXIT_INFEASIBLE


def cmd_compose(args) -> int:
    g = _graph(args)
    P, Q = _systems(args, g, 2)
    if args.strategy is None:
        out, name = compose_best(P, Q, args.hit_cap)
    else:
        got = compose_strategies(P, Q, args.hit_cap)[args.strategy]
        if isinstance(got, Exception):
            raise got
        out, name = got, args.strategy
    print(f"# strategy {name}")
    if name == "cascade":
        for line in build_cascade(P, Q, args.hit_cap).to_lines():
            print(f"# {line}")
    sys.stdout.write(format_system(out))
    return EXIT_OK


def _gen_instance(args) -> PlantedInstance | MultiGraph:
    seed = args.seed or 0
    kind = args.kind or "random"
    if kind == "random":
        return gen_random_multigraph(args.n, args.m, args.mult, seed)
    if kind == "backbone":
        return gen_planted_backbone(args.segments, args.width, args.seg_length, seed)
    if kind == "weave":
        return gen_weave_config(args.segments, args.r or 1, args.seg_length, seed)
    if kind == "lift":
        return gen_lift_instance(args.segments, args.width, args.seg_length, seed)
    if kind == "quadruple":
        q = gen_concat_quadruple(seed, args.violate)
        systems = {
            name: PathSystem(q.graph, leg.start, leg.end(q.graph), (leg,))
            for name, leg in zip(("aPu", "aP2v", "uQc", "vQ2c"), q.legs)
        }
        return PlantedInstance(q.graph, {}, {"kind": "quadruple", "violated": q.violated or "none"}, systems)
    return gen_compose_scenario(kind, args.size, args.depth, seed)


def cmd_gen(args) -> int:
    inst = _gen_instance(args)
    if isinstance(inst, MultiGraph):
        inst = PlantedInstance(inst, {}, {"kind": "random"})
    graph_text, meta_text, systems = inst.emit()
    if args.out is None:
        sys.stdout.write(graph_text)
        sys.stdout.write("".join(f"# {line}\n" for line in meta_text.splitlines()))
        return EXIT_OK
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    written = [prefix.with_name(prefix.name + ".ocg"), prefix.with_name(prefix.name + ".meta")]
    written[0].write_text(graph_text)
    written[1].write_text(meta_text)
    for name, text in systems.items():
        path = prefix.with_name(f"{prefix.name}.{name}.sys")
        path.write_text(text)
        written.append(path)
    for path in written:
        print(path)
    return EXIT_OK


def cmd_oracle(args) -> int:
    _need(args, "a", "b")
    g = _graph(args)
    limits = DEFAULT_LIMITS if args.limits is None else OracleLimits.parse(args.limits)
    paths = enumerate_paths(g, args.a, args.b, limits)
    ke = brute_kappa_E(g, args.a, args.b, limits)
    oc, witness = brute_max_oc(g, args.a, args.b, limits)
    print(f"paths {len(paths)}")
    print(f"brute_kappa_e {ke}")
    print(f"brute_max_oc {oc}")
    sys.stdout.write(format_system(witness))
    return EXIT_OK


def cmd_corpus(args) -> int:
    numbers = None if args.only is None else [int(x) for x in args.only.split(",")]
    results = acceptance.run_all(numbers)
    for r in results:
        print(r.line())
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def _limits_arg(text: str) -> str:
    try:
        OracleLimits.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected n,m,paths") from None
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocpaths", description="Edge-disjoint, order-compatible path systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, help_text: str, *, graph: bool = True, pair: bool = False,
                systems: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if graph:
            p.add_argument("--graph", metavar="FILE", help="graph in ocg format")
        if systems:
            p.add_argument("--system", metavar="FILE", action="append", help="system file (repeatable)")
        if pair:
            p.add_argument("-a", type=int, help="source vertex")
            p.add_argument("-b", type=int, help="sink vertex")
        return p

    p = command("check", cmd_check, "verify a path system", systems=True)
    p.add_argument("--cert", metavar="FILE", help="re-check a certificate line against the system")

    p = command("kappa", cmd_kappa, "edge and vertex connectivity of a pair", pair=True)
    p.add_argument("--witness", action="store_true", help="also print the witness systems")

    p = command("dirac", cmd_dirac, "minimal order-compatible system", pair=True)
    p.add_argument("-k", type=int, help="number of paths (default: kappa_e)")
    p.add_argument("--seed", type=int, help="randomise decomposition tie-breaks")

    p = command("backbone", cmd_backbone, "extract a backbone from a family", systems=True)
    p.add_argument("--tau", type=int, help="connectivity floor")

    p = command("weave", cmd_weave, "weave segment families along a backbone", systems=True)
    p.add_argument("--backbone", metavar="VERTICES", help="backbone vertices, space or comma separated")
    p.add_argument("-r", type=int, help="number of paths wanted")

    p = command("compose", cmd_compose, "compose an a-b and a b-c system", systems=True)
    p.add_argument("--strategy", choices=STRATEGIES, help="force one strategy")
    p.add_argument("--hit-cap", type=int, help="cascade hitting cap (default: half of |P|, rounded up)")

    p = command("gen", cmd_gen, "generate an instance", graph=False)
    p.add_argument("--kind", choices=GEN_KINDS, help="instance family (default: random)")
    p.add_argument("--seed", type=int, help="generator seed (default 0)")
    p.add_argument("-n", type=int, default=6, help="vertices (random)")
    p.add_argument("-m", type=int, default=10, help="edges (random)")
    p.add_argument("--mult", type=int, default=2, help="max multiplicity (random)")
    p.add_argument("--segments", type=int, default=2)
    p.add_argument("--width", type=int, default=3)
    p.add_argument("--seg-length", type=int, default=2)
    p.add_argument("-r", type=int, help="paths wanted (weave)")
    p.add_argument("--size", type=int, default=4, help="family size (compose scenarios)")
    p.add_argument("--depth", type=int, default=1, help="cascade depth")
    p.add_argument("--violate", choices=CONCAT_VIOLATIONS, help="break one precondition (quadruple)")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.ocg, PREFIX.meta and system files")

    p = command("oracle", cmd_oracle, "brute-force reference values", pair=True)
    p.add_argument("--limits", type=_limits_arg, metavar="N,M,PATHS", help="oracle limits (default 7,12,10000)")

    p = command("corpus", cmd_corpus, "run the acceptance sweep", graph=False)
    p.add_argument("--only", metavar="LIST", help="comma-separated criterion numbers")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SoundnessBreach as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OCPathsError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
