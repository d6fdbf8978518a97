"""``combknot`` command line: derive, normalize, zigzag, verify, count.

Exit status is 0 on success, 1 on validation or invariant failure and 2 on
parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import census
from .cmap import CombinatorialMap, knot_characteristic
from .errors import InvariantViolation, ParseError
from .notation import format_permutation, max_point, parse_graph, parse_permutation, to_dot
from .renum import build_plan, enumerate_plans, is_normalized_knot, normalize
from .zigzag import GREEN, to_map, zigzag_walk

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class ValidationError(ValueError):
    pass


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def _load_map(args) -> CombinatorialMap:
    text = _read_source(args.map)
    size = args.size
    if size is None:
        size = max_point(text)
        size += size % 2
    elif size < 0 or size % 2:
        raise ValidationError(f"--size must be a non-negative even number, got {size}")
    return CombinatorialMap(parse_permutation(text, size))


def _characteristic_text(knot) -> str:
    ch = knot_characteristic(knot)
    return f"{ch} (compact)" if ch.is_compact else str(ch)


def _corner_list(corners) -> str:
    return " ".join(map(str, sorted(corners)))


def derive_report(cmap: CombinatorialMap, verbose: bool = False) -> dict:
    a = cmap.knot()
    fmt = lambda p: format_permutation(p, verbose)  # noqa: E731
    return {
        "size": cmap.size,
        "P": fmt(cmap.rotation),
        "q": fmt(cmap.face_rotation()),
        "rho": fmt(cmap.edge_rotation()),
        "mu": fmt(a.knot),
        "characteristic": list(a.characteristic.half_lengths),
        "c1": sorted(a.green),
        "c2": sorted(a.red),
        "pi1": fmt(a.cut_edges),
        "pi2": fmt(a.cycle_edges),
        "gamma1": fmt(a.green_cycles),
        "gamma2": fmt(a.red_cycles),
        "alpha": fmt(a.knotting),
        "A": fmt(a.symmetric_knotting),
        "epsilon": fmt(a.structuring_knot),
        "euler": cmap.euler_characteristic(),
    }


def cmd_derive(args, out) -> int:
    cmap = _load_map(args)
    report = derive_report(cmap, args.verbose)
    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
        return EXIT_OK
    a = cmap.knot()
    lines = [
        ("corners", f"{cmap.size} (edges: {cmap.edge_count})"),
        ("vertex rotation", report["P"]),
        ("face rotation", report["q"]),
        ("edge involution", report["rho"]),
        ("knot", report["mu"]),
        ("knot characteristic", _characteristic_text(a.knot)),
        ("green corners", _corner_list(a.green)),
        ("red corners", _corner_list(a.red)),
        ("cut edges", report["pi1"]),
        ("cycle edges", report["pi2"]),
        ("green cycles", report["gamma1"]),
        ("red cycles", report["gamma2"]),
        ("knotting", report["alpha"]),
        ("symmetric knotting", report["A"]),
        ("edge structuring knot", report["epsilon"]),
        ("structuring characteristic", _characteristic_text(a.structuring_knot)),
        ("euler characteristic", str(report["euler"])),
    ]
    for label, value in lines:
        out.write(f"{label}: {value}\n")
    return EXIT_OK


def _t_text(plan) -> str:
    return "identity" if plan.T.is_identity() else format_permutation(plan.T)


def cmd_normalize(args, out) -> int:
    cmap = _load_map(args)
    analysis = cmap.knot()
    if args.all_plans:
        count = 0
        for count, plan in enumerate(enumerate_plans(analysis), 1):
            signs = "".join("+" if f else "-" for f in plan.orientations)
            order = " ".join(map(str, plan.orbit_order))
            out.write(f"plan {count}: order [{order}] orientation {signs} T {_t_text(plan)}\n")
        out.write(f"plans: {count}\n")
        return EXIT_OK

    normal, plan = normalize(cmap, build_plan(analysis))
    if not is_normalized_knot(normal):
        raise InvariantViolation("renumbered map does not have a normalized knot")
    if args.emit_T:
        out.write(format_permutation(plan.T) + "\n")
    elif args.emit_map:
        out.write(format_permutation(normal.rotation, verbose=True) + "\n")
    else:
        out.write(f"normalized map: {format_permutation(normal.rotation, args.verbose)}\n")
        out.write(f"T: {_t_text(plan)}\n")
        out.write(f"knot: {format_permutation(normal.knot().knot)}\n")
        out.write(f"knot characteristic: {_characteristic_text(normal.knot().knot)}\n")
    return EXIT_OK


def cmd_zigzag(args, out) -> int:
    g = parse_graph(_read_source(args.graph))
    trace = zigzag_walk(g)
    if args.dot:
        out.write(to_dot(g, trace))
        return EXIT_OK
    if args.emit_map:
        out.write(format_permutation(to_map(g).rotation, verbose=True) + "\n")
        return EXIT_OK
    out.write(f"components: {trace.component_count}\n")
    for i, comp in enumerate(trace.components, 1):
        steps = ", ".join(
            f"e{v.edge} {v.tail}->{v.head} {'green' if v.color == GREEN else 'red'}" for v in comp)
        out.write(f"component {i} ({len(comp)} visits): {steps}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.exhaustive is not None:
        maps = census.enumerate_maps(args.exhaustive)
    else:
        maps = census.sample_maps(args.size // 2, args.samples, args.seed)
    report = census.run_suite(maps)
    for name in census.CHECKS:
        label = f"theorem {name}" if name in census.THEOREMS else name
        out.write(f"{label}: {report.ok[name]}/{report.checked[name]}\n")
    if report.all_passed:
        out.write(f"{report.passed}/{report.total} maps pass; theorems {','.join(census.THEOREMS)}: OK\n")
        return EXIT_OK
    cmap, failed = report.first_failure
    out.write(f"{report.passed}/{report.total} maps pass; FAILED\n")
    out.write(f"counterexample: {format_permutation(cmap.rotation, verbose=True)} "
              f"(failed: {', '.join(failed)})\n")
    return EXIT_INVALID


def cmd_count(args, out) -> int:
    for flag, value, low in (("--partitions", args.partitions, 1), ("--knots", args.knots, 1),
                             ("--plans", args.plans, 0)):
        if value is not None and value < low:
            raise ValidationError(f"{flag} must be at least {low}, got {value}")
    if args.partitions is not None:
        n = args.partitions
        row = " ".join(str(census.pr(n, j)) for j in range(1, n + 1))
        out.write(f"pr({n}, j) for j = 1..{n}: {row}\n")
        out.write(f"p({n}) = {census.pr(n, n)}\n")
    if args.knots is not None:
        m = args.knots
        out.write(f"normalized knots (m={m}): {census.count_normalized_knots(m)}\n")
        for shape in census.normalized_knot_shapes(m):
            out.write(f"  {format_permutation(shape)}\n")
        counts = census.renumbered_knot_counts(m)
        out.write(f"renumbered knots, summed over partitions: {counts['per_partition_sum']}\n")
        flat = " ".join(f"k={k}:{v}" for k, v in counts["flat_product"].items())
        out.write(f"renumbered knots, p(m)*k!*2^k: {flat}\n")
        if m <= census.FACTORIZATION_MAX_EDGES:
            ok = census.factorization_identity(m)
            out.write(f"(2m)! = (2m-1)!! * 2^m * m! for m={m}: {factorial(2 * m)} {'OK' if ok else 'FAILED'}\n")
            if not ok:
                return EXIT_INVALID
    if args.plans is not None:
        out.write(f"plans (k={args.plans}): {census.renumbering_count(args.plans)}\n")
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="combknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def map_options(p):
        p.add_argument("--map", required=True,
                       help="vertex rotation in cycle notation, a file holding it, or '-' for stdin")
        p.add_argument("--size", type=int, help="number of corners 2m (default: largest point, rounded up to even)")
        p.add_argument("--verbose", action="store_true", help="show fixed points in cycle notation")

    p = sub.add_parser("derive", help="derive rotations, knot and induced structures of a map")
    map_options(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("normalize", help="renumber corners so the knot is normalized")
    map_options(p)
    p.add_argument("--all-plans", action="store_true", help="list every renumbering plan")
    p.add_argument("--emit-T", action="store_true", dest="emit_T", help="print only the renumbering T")
    p.add_argument("--emit-map", action="store_true", help="print only the normalized vertex rotation")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("zigzag", help="zigzag walk of a graph with rotation system")
    p.add_argument("--graph", required=True, help="graph file ('v: n1 n2 ...' per line) or '-' for stdin")
    p.add_argument("--emit-map", action="store_true", help="print the vertex rotation of the corresponding map")
    p.add_argument("--dot", action="store_true", help="emit DOT with edges labelled by color classes")
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser("verify", help="run the theorem suite on small maps")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", type=_non_negative, metavar="M", help=f"all maps on M <= {census.EXHAUSTIVE_MAX_EDGES} edges")
    group.add_argument("--samples", type=_positive, metavar="N", help="number of random maps")
    p.add_argument("--size", type=int, metavar="2M", help="corners per sampled map")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="partition and renumbering counts")
    p.add_argument("--partitions", type=int, metavar="N")
    p.add_argument("--knots", type=int, metavar="M")
    p.add_argument("--plans", type=int, metavar="K")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "verify":
        if args.exhaustive is not None and args.exhaustive > census.EXHAUSTIVE_MAX_EDGES:
            parser.print_usage(sys.stderr)
            print(f"combknot verify: --exhaustive is limited to {census.EXHAUSTIVE_MAX_EDGES}", file=sys.stderr)
            return EXIT_USAGE
        if args.samples is not None:
            if args.size is None or args.size < 0 or args.size % 2 or args.size // 2 > census.SAMPLED_MAX_EDGES:
                parser.print_usage(sys.stderr)
                print(f"combknot verify: --samples needs an even --size up to {2 * census.SAMPLED_MAX_EDGES}",
                      file=sys.stderr)
                return EXIT_USAGE
    if args.command == "count" and args.partitions is None and args.knots is None and args.plans is None:
        print("combknot count: give at least one of --partitions, --knots, --plans", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"combknot {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, InvariantViolation) as exc:
        print(f"combknot {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
