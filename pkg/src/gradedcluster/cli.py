"""Command-line entry points for mutation, classification, censuses and the
explorer service."""

from __future__ import annotations

import argparse
import json
import sys

from .census import CensusLimits, enumerate_census, resume
from .core import GradedSeed, MutationPath, apply_path, seed_from_json
from .exceptional import (PERIOD_PATHS, PRESET_NAMES, preset,
                          verify_denominator_forms, verify_period)
from .finitetype import degree_distribution
from .grids import (grassmannian_quiver, matrix_quiver, verify_degree_paths)
from .growth import certify_infinite_degrees, find_growth_triangle, find_linear_pattern
from .laurent import apply_path_symbolic, degree_of
from .rank3 import classify, m3, standard_grading
from .surfaces import annulus, hexagon_example, signed_adjacency, surface_to_json


def _load_seed(args) -> GradedSeed:
    if getattr(args, "preset", None):
        return preset(args.preset)
    if getattr(args, "seed", None):
        text = args.seed
        if text.strip().startswith("{"):
            return seed_from_json(text)
        with open(text) as fh:
            return seed_from_json(fh.read())
    raise SystemExit("a --preset or --seed is required")


def _parse_path(text: str) -> MutationPath:
    data = json.loads(text) if text.strip().startswith("[") else \
        [int(t) for t in text.replace(",", " ").split()]
    return MutationPath.from_list(data)


def cmd_mutate(args) -> int:
    seed = _load_seed(args)
    path = _parse_path(args.path)
    final, steps = apply_path(seed, path, trace=True)
    for step in steps:
        print(json.dumps({
            "direction": step["direction"],
            "new_degree": list(step["new_degree"]),
            "new_denominator": list(step["new_denominator"]),
            "degrees": [list(d) for d in step["degrees"]],
        }))
    out = {
        "matrix": [list(r) for r in final.matrix.rows],
        "degrees": [list(final.degree(j + 1)) for j in range(final.matrix.size)],
        "denominators": [list(d) for d in final.denominators],
    }
    if args.symbolic:
        cluster, _ = apply_path_symbolic(seed.matrix, path)
        out["cluster"] = [v.render() for v in cluster]
        if args.evaluate:
            from fractions import Fraction
            point = [Fraction(str(x)) for x in json.loads(args.evaluate)]
            values = [v.evaluate(point) for v in cluster]
            out["values"] = [str(v) for v in values]
    print(json.dumps(out))
    return 0


def cmd_classify3(args) -> int:
    A = m3(args.a, args.b, args.c)
    result = classify(A)
    rep = result.minimal_representative
    out = {
        "class": result.variant.value,
        "minimal_representative": [list(r) for r in rep.rows],
        "standard_form_params": list(result.standard_form_params),
        "markov_constant": result.markov,
    }
    if args.evidence_depth:
        out["degree_two_variables"] = _mixed_case_evidence(A, args.evidence_depth)
    print(json.dumps(out, indent=2))
    return 0


def _mixed_case_evidence(A, depth: int):
    """Distinct symbolic variables of degree +-2 reachable within depth."""
    g = standard_grading(A)
    found = {}
    frontier = [((), A, None)]
    seen_paths = set()
    for _ in range(depth):
        nxt = []
        for steps, B, _ in frontier:
            for k in range(1, 4):
                if steps and steps[-1] == k:
                    continue
                path = steps + (k,)
                if path in seen_paths:
                    continue
                seen_paths.add(path)
                cluster, B2 = apply_path_symbolic(A, list(reversed(path)))
                deg = degree_of(cluster[k - 1], g)
                if deg[0] in (2, -2):
                    found.setdefault(cluster[k - 1].render(), deg[0])
                nxt.append((path, B2, None))
        frontier = nxt
    return {"count": len(found), "by_degree": {
        "2": sorted(v for v, d in found.items() if d == 2),
        "-2": sorted(v for v, d in found.items() if d == -2)}}


def cmd_finite_type(args) -> int:
    dist = degree_distribution(args.family, args.n)
    if args.table:
        print("degree  count")
        for d in sorted(dist):
            print("%6d  %d" % (d, dist[d]))
        print(" total  %d" % sum(dist.values()))
    else:
        print(json.dumps({str(k): v for k, v in sorted(dist.items())}))
    return 0


def cmd_census(args) -> int:
    limits = CensusLimits(max_classes=args.max_classes, max_entry=args.max_entry,
                          wall_clock=args.wall_clock)
    if args.resume:
        report = resume(args.checkpoint, limits)
    else:
        seed = _load_seed(args)
        report = enumerate_census(seed, mode=args.mode, limits=limits,
                                  checkpoint=args.checkpoint, symmetry=args.symmetry)
    print(json.dumps({
        "mode": report.mode,
        "class_count": report.class_count,
        "occurring_degrees": sorted(map(str, report.occurring_degrees)),
        "frontier_exhausted": report.frontier_exhausted,
        "budget_hit": report.budget_hit,
        "entry_cap_hit": report.entry_cap_hit,
        "elapsed": round(report.elapsed, 3),
    }))
    return 0


def cmd_verify(args) -> int:
    failures = 0
    names = [args.preset] if args.preset else ["X7", "E6aff", "E7aff", "E8aff"]
    for name in names:
        if name in PERIOD_PATHS:
            report = verify_period(name, n_max=min(args.n, 10))
            print("%s period: %s" % (name, "ok" if report.ok else report.mismatches))
            failures += not report.ok
        if name in ("X7", "E6aff", "E7aff", "E8aff"):
            report = verify_denominator_forms(name, n_max=args.n)
            print("%s denominators (n <= %d): %s"
                  % (name, args.n, "ok" if report.ok else report.mismatches))
            failures += not report.ok
    return 1 if failures else 0


def cmd_grid(args) -> int:
    if args.verify == "all-degrees":
        report = verify_degree_paths(args.family, args.k, args.l)
        print(json.dumps({
            "ok": report.ok,
            "covered": report.covered,
            "base_degrees": sorted(report.base_degrees),
            "all_degrees_certified": report.all_degrees_certified,
            "mismatches": report.mismatches,
        }, indent=2))
        return 0 if report.ok and report.all_degrees_certified else 1
    seed = matrix_quiver(args.k, args.l) if args.family == "matrix" \
        else grassmannian_quiver(args.k, args.l)
    print(json.dumps({
        "n": seed.n, "m": seed.m,
        "matrix": [list(r) for r in seed.matrix.rows],
        "degrees": [list(seed.degree(j + 1)) for j in range(seed.matrix.size)],
    }))
    return 0


def cmd_surface(args) -> int:
    if args.hexagon:
        T = hexagon_example()
        B = signed_adjacency(T)
        print(json.dumps({"B": [list(r) for r in B.rows],
                          "arcs": list(T.arc_order)}))
        return 0
    T, fs, seed = annulus(args.annulus[0], args.annulus[1], args.valuation)
    out = {
        "B": [list(r) for r in seed.matrix.rows],
        "degrees": [list(seed.degree(j + 1)) for j in range(seed.matrix.size)],
        "surface": surface_to_json(T, fs),
    }
    print(json.dumps(out))
    return 0


def cmd_growth(args) -> int:
    seed = _load_seed(args)
    if args.certify:
        cert = certify_infinite_degrees(seed, args.certify)
        print(json.dumps(cert.to_json() if cert else None))
        return 0 if cert else 1
    out = {
        "triangles": [
            {"vertices": [t.v1, t.v2, t.v3], "degrees": list(t.degrees),
             "proposition": t.proposition}
            for t in find_growth_triangle(seed)],
        "linear": [
            {"vertices": [p.v1, p.v2], "side": p.side, "d1": p.d1, "d2": p.d2}
            for p in find_linear_pattern(seed)],
    }
    print(json.dumps(out, indent=2))
    return 0


def cmd_serve(args) -> int:
    from .service import serve
    serve(args.port, args.cors, args.snapshot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedcluster",
        description="Graded cluster algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation path to a seed")
    p.add_argument("--preset", choices=PRESET_NAMES)
    p.add_argument("--seed", help="seed JSON (inline or a file path)")
    p.add_argument("--path", required=True, help="right-to-left path, e.g. [3,2,1]")
    p.add_argument("--symbolic", action="store_true",
                   help="track cluster variables symbolically")
    p.add_argument("--evaluate", metavar="POINT",
                   help='rational evaluation point, e.g. [1,1,1] or ["1/2",1,1]')
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("classify3", help="classify a rank-3 cyclic-form matrix")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--evidence-depth", type=int, default=0)
    p.set_defaults(func=cmd_classify3)

    p = sub.add_parser("finite-type", help="type B/C degree distributions")
    p.add_argument("--family", choices=("B", "C"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_finite_type)

    p = sub.add_parser("census", help="mutation/degree class enumeration")
    p.add_argument("--preset", choices=PRESET_NAMES)
    p.add_argument("--seed")
    p.add_argument("--mode", choices=("matrix", "degree"), default="degree")
    p.add_argument("--symmetry", choices=("essential", "isomorphism"),
                   default="essential")
    p.add_argument("--checkpoint")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--max-classes", type=int)
    p.add_argument("--max-entry", type=int)
    p.add_argument("--wall-clock", type=float)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="closed-form verifications")
    p.add_argument("--preset", choices=("X7", "E6aff", "E7aff", "E8aff"))
    p.add_argument("--n", type=int, default=50)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grid", help="matrix/Grassmannian quivers")
    p.add_argument("--family", choices=("matrix", "grassmannian"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify", choices=("all-degrees",))
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("surface", help="triangulated surfaces")
    p.add_argument("--hexagon", action="store_true")
    p.add_argument("--annulus", nargs=2, type=int, metavar=("N", "M"))
    p.add_argument("--valuation", choices=("g", "h", "l"), default="g")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("growth", help="growth patterns in a degree quiver")
    p.add_argument("--preset", choices=PRESET_NAMES)
    p.add_argument("--seed")
    p.add_argument("--certify", type=int, metavar="DEPTH")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("serve", help="run the explorer HTTP service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--cors", action="store_true")
    p.add_argument("--snapshot", help="JSON file persisting sessions across restarts")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
