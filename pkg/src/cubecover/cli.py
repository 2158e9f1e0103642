"""Command-line interface.

Exit status: 0 success, 1 verification failed or optimality not proved,
2 invalid arguments, 3 resource limit exceeded.  Data goes to standard output
(or ``--output``); diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

from .bounds import bound_report, bounds_c, bounds_pc, lower_bound_f
from .constructions import CoveringSet, construct_facet_cover, construct_pipeline_cover, verify_covering
from .cube import Params, enumerate_subcubes, format_subcube
from .polychromatic import color_class, color_of, format_color, parse_color, scheme, verify_polychromatic
from .solver import DEFAULT_BUDGET, ResourceError, build_incidence, solve_min_cover

log = logging.getLogger("cubecover")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
OUTPUT_DIR_ENV = "CUBECOVER_OUTPUT_DIR"
MAX_SEED = 2 ** 64 - 1


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _range(text: str) -> range:
    lo, _, hi = text.partition("-")
    try:
        start = int(lo)
        stop = int(hi) if hi else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A or A-B, got {text!r}") from None
    return range(start, stop + 1)


def _params(args) -> Params:
    try:
        return Params(args.n, args.d, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def cmd_enumerate(args):
    if not 0 <= args.i <= args.n:
        raise UsageError(f"subcube dimension {args.i} out of range 0..{args.n}")
    cubes = [format_subcube(q) for q in enumerate_subcubes(args.n, args.i)]
    if args.format == "text":
        return "".join(c + "\n" for c in cubes), EXIT_OK
    return _dump({"n": args.n, "i": args.i, "count": len(cubes), "subcubes": cubes}), EXIT_OK


def cmd_color(args):
    p = _params(args)
    s = scheme(p.d, p.l)
    info = {"d": s.d, "l": s.l, "r": s.r, "k": s.k, "kprime": s.kprime}
    if args.verify:
        report = verify_polychromatic(p.n, s, lambda q: color_of(q, s))
        out = {"n": p.n, "scheme": info, "palette_size": len(list(s.palette())), "ok": report.ok, "witness": None}
        if report.witness:
            c, t = report.witness
            out["witness"] = {"subcube": format_subcube(c), "color": format_color(t)}
        return _dump(out), EXIT_OK if report.ok else EXIT_FAILED
    if args.color_class:
        try:
            t = parse_color(args.color_class)
            return _dump(color_class(p.n, s, t).to_dict()), EXIT_OK
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    colors = {format_subcube(q): format_color(color_of(q, s)) for q in enumerate_subcubes(p.n, p.l)}
    return _dump({"n": p.n, "scheme": info, "palette_size": len(list(s.palette())), "colors": colors}), EXIT_OK


def cmd_cover(args):
    p = _params(args)
    if args.method == "facet":
        if p.d != p.n - 1:
            raise UsageError("the facet construction needs d = n - 1")
        cs = construct_facet_cover(p.n, p.l)
    else:
        cs = construct_pipeline_cover(p.n, p.d, p.l, args.seed)
    log.info("%s cover: %d members", args.method, len(cs))
    return _dump(cs.to_dict()), EXIT_OK


def cmd_verify(args):
    try:
        cs = CoveringSet.from_json(Path(args.file).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read covering set from {args.file}: {exc}") from None
    report = verify_covering(cs)
    out = {"n": cs.n, "d": cs.d, "l": cs.l, "size": len(cs), **report.to_dict()}
    return _dump(out), EXIT_OK if report.ok else EXIT_FAILED


def cmd_solve(args):
    p = _params(args)
    inst = build_incidence(p)
    result = solve_min_cover(inst, args.budget)
    log.info("f=%d after %d nodes (proved=%s)", result.size, result.nodes_explored, result.proved_optimal)
    return _dump(result.to_dict()), EXIT_OK if result.proved_optimal else EXIT_FAILED


def cmd_bounds(args):
    return _dump(bound_report(_params(args)).to_dict()), EXIT_OK


def cmd_table(args):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "d", "l", "f_lower", "f_exact", "c_lower", "c_upper", "pc_lower", "pc_upper"])
    status = EXIT_OK
    for n in args.n_range:
        for d in args.d_range:
            for l in args.l_range:
                if not 0 <= l < d < n:
                    continue
                p = Params(n, d, l)
                f_exact = ""
                if args.exact:
                    res = solve_min_cover(build_incidence(p), args.budget)
                    f_exact = res.size if res.proved_optimal else ""
                    if not res.proved_optimal:
                        status = EXIT_FAILED
                c_lo, c_hi = bounds_c(d, l)
                pc_lo, pc_hi = bounds_pc(d, l)
                writer.writerow([n, d, l, lower_bound_f(p), f_exact, c_lo, c_hi, pc_lo, pc_hi])
    if args.format == "json":
        rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
        return _dump(rows), status
    return buf.getvalue(), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubecover", description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", help=f"write data here (relative paths resolve against ${OUTPUT_DIR_ENV} if set)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def ndl(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("enumerate", help="list the i-dimensional subcubes of Q_n")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("color", help="residue coloring of the Q_l's")
    ndl(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--verify", action="store_true", help="check that the coloring is polychromatic")
    group.add_argument("--class", dest="color_class", metavar="C1,C2,...", help="emit one color class as a covering set")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("cover", help="construct a covering set")
    ndl(p)
    p.add_argument("--method", choices=["facet", "pipeline"], required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check a covering set JSON file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum covering set")
    ndl(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="closed-form bounds")
    ndl(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="bounds over parameter ranges")
    p.add_argument("--n-range", type=_range, required=True)
    p.add_argument("--d-range", type=_range, required=True)
    p.add_argument("--l-range", type=_range, required=True)
    p.add_argument("--exact", action="store_true", help="also run the exact solver")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)
    return parser


def _write(text: str, output) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    outdir = os.environ.get(OUTPUT_DIR_ENV)
    if outdir and not path.is_absolute():
        path = Path(outdir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    try:
        text, status = args.func(args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except ResourceError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    _write(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
