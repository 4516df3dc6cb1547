"""Command line entry point: ``padic-gl {analyze,verify,polygon,campaign}``.

Exit codes: 0 success, 1 usage error, 2 a bound failed to hold.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from ..gauss_lucas import TheoremReport, critical_radii, verify_theorem, verify_with_explicit_disk
from ..newton_polygon import build_polygon, root_valuations
from ..polynomial import derivative, format_poly, parse_poly, parse_rational, taylor_shift
from ..valuation import Prime, format_valuation, norm_string, parse_valuation
from .campaign import run_campaign
from .generators import GeneratorConfig, Mode
from .serialize import dumps, polygon_json, radii_json, report_json, val_json, valued

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _prime(text):
    try:
        return Prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _primes(text):
    return tuple(_prime(t) for t in text.split(",") if t.strip())


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _valuation(text):
    try:
        return parse_valuation(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"malformed valuation {text!r}") from None


def _poly(text):
    try:
        return parse_poly(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _degrees(text):
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected min:max, got {text!r}") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padic-gl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, poly=True):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--out", help="also write the JSON document to this file")
        if poly:
            sp.add_argument("--prime", type=_prime, required=True)
            sp.add_argument("--poly", type=_poly, required=True,
                            help="coefficients lowest degree first, e.g. 0,0,-1,1")
            sp.add_argument("--center", type=_rational, default=Fraction(0))

    common(sub.add_parser("analyze", help="full analysis of one polynomial"))
    sp = sub.add_parser("verify", help="check the bounds for a given enclosing disk")
    common(sp)
    sp.add_argument("--radius-exp", type=_valuation, required=True,
                    help="valuation of the radius r, i.e. r = p^(-exp)")
    common(sub.add_parser("polygon", help="Newton polygon only"))

    sp = sub.add_parser("campaign", help="verify randomly generated instances")
    common(sp, poly=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--primes", type=_primes, default=(2, 3, 5, 7, 11, 13))
    sp.add_argument("--degrees", type=_degrees, default=(2, 12))
    sp.add_argument("--coeff-height", type=int, default=10)
    sp.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.MIXED.value)
    sp.add_argument("--jobs", type=int, default=1)
    return parser


def _vals_text(vals, p):
    return "{" + ", ".join(format_valuation(v) for v in vals) + "}"


def _vertices_text(poly):
    return ", ".join(f"({i},{format_valuation(v)})" for i, v in poly.vertices)


def _report_text(rep: TheoremReport) -> list[str]:
    p = rep.prime
    lines = [
        f"enclosing disk: val(r) = {format_valuation(rep.base_val)}  (r = {norm_string(rep.base_val, p)})",
        "   k  val(r_k)    r_k          count  holds  tight",
    ]
    for r in rep.per_k:
        lines.append(
            f"{r.k:4d}  {format_valuation(r.bound_val):<10}  {norm_string(r.bound_val, p):<11}"
            f"  {r.count_in_disk:5d}  {str(r.holds):<5}  {r.tight}"
        )
    lines += [
        f"corollary 1: val = {format_valuation(rep.c1_val)}  (r = {norm_string(rep.c1_val, p)})"
        f"  holds={rep.corollary1_holds}",
        f"corollary 2: val = {format_valuation(rep.c2_val)}  (r = {norm_string(rep.c2_val, p)})"
        f"  holds={rep.corollary2_holds}",
        f"corollary 3: applicable={rep.corollary3_applicable}  holds={rep.corollary3_holds}",
        f"all bounds hold: {rep.all_hold}",
    ]
    return lines


def _analysis(args, rep: TheoremReport):
    P, p, a = args.poly, int(args.prime), args.center
    shifted = taylor_shift(P, a)
    roots = root_valuations(shifted, p)
    crit = root_valuations(taylor_shift(derivative(P), a), p)
    radii = critical_radii(P.degree, rep.base_val, p)
    doc = {
        "input": {"poly": format_poly(P), "prime": int(p), "center": str(a)},
        "newton_polygon": polygon_json(build_polygon(shifted, p)),
        "root_valuations": [valued(v, p) for v in roots],
        "derivative_valuations": [valued(v, p) for v in crit],
        "critical_enclosing_val": valued(min(crit), p),
        "critical_radii": radii_json(radii),
        "report": report_json(rep),
    }
    if args.command == "verify":
        doc["input"]["radius_exp"] = val_json(rep.base_val)
    poly = build_polygon(shifted, p)
    text = [
        f"P(z + {a}) = {format_poly(shifted)}  over Q_{p}",
        f"newton polygon vertices: {_vertices_text(poly)}  zero roots: {poly.zero_root_count}",
        f"root valuations:       {_vals_text(roots, p)}",
        f"critical valuations:   {_vals_text(crit, p)}",
        f"smallest disk holding all critical points: val = {format_valuation(min(crit))}"
        f"  (r = {norm_string(min(crit), p)})",
        *_report_text(rep),
    ]
    return doc, text, (EXIT_OK if rep.all_hold else EXIT_VIOLATION)


def _cmd_analyze(args):
    return _analysis(args, verify_theorem(args.poly, args.prime, args.center))


def _cmd_verify(args):
    try:
        rep = verify_with_explicit_disk(args.poly, args.prime, args.center, args.radius_exp)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _analysis(args, rep)


def _cmd_polygon(args):
    P, p, a = args.poly, int(args.prime), args.center
    shifted = taylor_shift(P, a)
    poly = build_polygon(shifted, p)
    roots = root_valuations(shifted, p)
    doc = {
        "input": {"poly": format_poly(P), "prime": int(p), "center": str(a)},
        "newton_polygon": polygon_json(poly),
        "root_valuations": [valued(v, p) for v in roots],
    }
    text = [
        f"vertices: {_vertices_text(poly)}",
        f"zero roots: {poly.zero_root_count}",
        f"root valuations: {_vals_text(roots, p)}",
    ]
    return doc, text, EXIT_OK


def _cmd_campaign(args):
    try:
        config = GeneratorConfig(
            seed=args.seed,
            primes=args.primes,
            degree_min=args.degrees[0],
            degree_max=args.degrees[1],
            coeff_height=args.coeff_height,
            mode=Mode(args.mode),
            trials=args.trials,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = run_campaign(config, jobs=max(1, args.jobs))
    doc = {"config": config.to_json(), "result": result.to_json()}
    text = [
        f"instances: {result.total} generated + {result.corpus_size} corpus",
        f"tight instances: {result.tight_instances}",
        f"violations: {len(result.violations)}",
        *(f"  {v}" for v in result.violations),
        f"elapsed: {result.elapsed} ms",
    ]
    return doc, text, (EXIT_VIOLATION if result.violations else EXIT_OK)


COMMANDS = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "polygon": _cmd_polygon,
    "campaign": _cmd_campaign,
}


def cli_main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command != "campaign":
            if args.poly.is_zero():
                raise UsageError("zero polynomial")
            need = 1 if args.command == "polygon" else 2
            if args.poly.degree < need:
                raise UsageError(f"{args.command} requires degree >= {need}")
        doc, text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"padic-gl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    print(out if args.json else "\n".join(text))
    return code


def main():
    sys.exit(cli_main())
