"""Command-line front end.

Subcommands emit defining polynomials (``twist``, ``bridge``), run the
identity suites (``verify``), and print irreducibility and minimality
certificates (``irreducible``, ``minimality``).  All flags are long-form
and output is deterministic: polynomials render from canonically sorted
terms and suite summaries list cases in a fixed order, so two runs of
the same command produce byte-identical text.

Exit codes: 0 success, 1 a check or certificate failed, 2 bad usage or
parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bridge, oracle, suites, twist
from .bridge import InvalidParams, OutOfScope
from .chebyshev import NegativeIndex
from .twist import Coords

__all__ = ["main"]

_MIRROR_MSG = ("negative twist parameters are redundant: K_-m is the mirror "
               "image of K_{m-1}, so X(K_-m) = X(K_{m-1}); rerun with the "
               "non-negative parameter")


class UsageError(Exception):
    pass


def _emit_poly(poly, coords: Coords, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(poly.to_json(coords=coords.value), sort_keys=True),
              file=out)
    else:
        print(f"[{coords.value}] {poly}", file=out)


def _cmd_twist(args, out) -> int:
    m = args.m
    if m < 0:
        raise UsageError(_MIRROR_MSG)
    if args.form == "skein":
        _emit_poly(twist.r_m(m), Coords.SKEIN, args.format, out)
    else:
        # trace coordinates split by parity of the twist number
        if m % 2 == 0:
            _emit_poly(twist.l_n(m // 2), Coords.TRACE_EVEN, args.format, out)
        else:
            _emit_poly(twist.l_prime_n((m + 1) // 2), Coords.TRACE_ODD,
                       args.format, out)
    return 0


def _cmd_bridge(args, out) -> int:
    p, q, method = args.p, args.q, args.method
    bridge.BridgeParams(p, q)
    coords = Coords(args.coords)
    if method in ("recursion", "closed", "all"):
        if q != 3:
            raise UsageError(f"method {method!r} needs q = 3, got q = {q}")
        if coords is not Coords.BRIDGE_XZ:
            raise UsageError(
                f"method {method!r} only produces {Coords.BRIDGE_XZ.value} "
                "coordinates")

    if method == "recursion":
        _emit_poly(bridge.phi_recursive_p3(p), coords, args.format, out)
        return 0
    if method == "closed":
        _emit_poly(bridge.phi_closed_p3(p), coords, args.format, out)
        return 0
    if method == "oracle":
        res = oracle.defining_poly(p, q, coords)
        if args.format == "json":
            print(json.dumps(res.to_json(), sort_keys=True), file=out)
        else:
            print(f"[{coords.value}] (oracle sign {res.sign:+d}) {res.poly}",
                  file=out)
        return 0

    rec = bridge.phi_recursive_p3(p)
    clo = bridge.phi_closed_p3(p)
    res = oracle.defining_poly(p, q, coords)
    agree = rec == clo and (res.poly == clo or -res.poly == clo)
    if agree:
        print(f"3 methods agree (oracle sign {res.sign:+d})", file=out)
        _emit_poly(clo, coords, args.format, out)
        return 0
    print("METHOD DISAGREEMENT", file=out)
    for name, poly in (("recursion", rec), ("closed", clo),
                       ("oracle", res.poly)):
        print(f"  {name}: {poly}", file=out)
    return 1


def _cmd_verify(args, out) -> int:
    if args.suite not in suites.SUITES:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from {sorted(suites.SUITES)}")
    if args.max < 1:
        raise UsageError(f"--max must be >= 1, got {args.max}")
    result = suites.run_suite(args.suite, args.max)
    if args.format == "json":
        print(json.dumps(result.to_json(), sort_keys=True), file=out)
    else:
        # wall time is left out of the text form so output is byte-stable
        print(result.summary(), file=out)
    return 0 if result.ok else 1


def _parse_target(target: str) -> tuple[str, int]:
    kind, _, value = target.partition(":")
    if kind not in ("twist", "bridge3") or not value.lstrip("-").isdigit():
        raise UsageError(
            f"target must look like twist:M or bridge3:P, got {target!r}")
    return kind, int(value)


def _cmd_irreducible(args, out) -> int:
    kind, value = _parse_target(args.target)
    if kind == "twist":
        if value < 1:
            raise UsageError(f"twist certificate needs m >= 1, got {value}")
        report = twist.check_r_tilde_irreducible(value)
        knot = f"K_{value}"
    else:
        report = bridge.check_phi_irreducible_p3(value)
        knot = f"b({value},3)"
    if args.format == "json":
        print(json.dumps(report.to_json(knot=knot), sort_keys=True), file=out)
    else:
        print(f"{knot}: {report.verdict}", file=out)
        print(f"  f = {report.f}", file=out)
        print(f"  g = {report.g}", file=out)
        print(f"  degree gap = {report.degree_gap}, gcd = {report.gcd}",
              file=out)
    return 0 if report.irreducible else 1


def _cmd_minimality(args, out) -> int:
    kind, value = _parse_target(args.target)
    record = bridge.minimality_report(kind, value)
    if args.format == "json":
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        print(f"{record['knot']}: minimal = {record['minimal']} "
              f"({record['verdict']})", file=out)
        print(f"  certificate: {record['certificate']}", file=out)
        for a in record["assumptions"]:
            print(f"  assumption (not verified): {a}", file=out)
    return 0 if record["minimal"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotchar",
        description="exact character-variety polynomials for twist and "
                    "2-bridge knots")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("twist", help="defining polynomial of K_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--form", choices=("trace", "skein"), default="trace")
    add_format(p)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("bridge", help="defining polynomial of b(p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method",
                   choices=("recursion", "closed", "oracle", "all"),
                   default="closed")
    p.add_argument("--coords",
                   choices=tuple(c.value for c in Coords
                                 if c is not Coords.SKEIN),
                   default=Coords.BRIDGE_XZ.value)
    add_format(p)
    p.set_defaults(func=_cmd_bridge)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max", type=int, default=50)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("irreducible", help="irreducibility certificate")
    p.add_argument("--target", required=True,
                   help="twist:M or bridge3:P")
    add_format(p)
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("minimality", help="minimality record")
    p.add_argument("--target", required=True,
                   help="twist:M or bridge3:P")
    add_format(p)
    p.set_defaults(func=_cmd_minimality)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, InvalidParams, OutOfScope, NegativeIndex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
