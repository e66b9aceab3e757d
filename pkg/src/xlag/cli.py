"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .construct import SeedSpec, g_mixed
from .eop import eop_construct
from .errors import InvalidSeedSpec, SingularPotential, XlagError
from .ratpoly import Poly
from .spectral import (
    Grid, conventional_potential, extended_potential, predicted_energies, solve_bound_states,
)
from .sweep import SUITES, iter_specs, pmap, run_suite


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def poly_to_json(p: Poly) -> list:
    return [fraction_str(c) for c in p.coeffs]


def poly_from_json(coeffs: list) -> Poly:
    return Poly(Fraction(c) for c in coeffs)


def spec_to_json(spec: SeedSpec) -> dict:
    return {
        "alpha": fraction_str(spec.alpha),
        "omega": fraction_str(spec.omega),
        "type1": list(spec.m_I),
        "type2": list(spec.m_II),
    }


def g_to_json(spec: SeedSpec) -> dict:
    res = g_mixed(spec)
    return {
        "coeffs": poly_to_json(res.g),
        "mu": res.mu,
        "leading": fraction_str(res.leading),
        "nodeless": res.nodeless,
    }


def _index_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 7/2, got {text!r}") from None


def _add_spec_args(p: argparse.ArgumentParser):
    p.add_argument("--alpha", type=_rational, required=True, help="alpha = l + 1/2, e.g. 7/2")
    p.add_argument("--omega", type=_rational, default=Fraction(1))
    p.add_argument("--type1", type=_index_list, default=(), help="type-I indices, e.g. 1,2")
    p.add_argument("--type2", type=_index_list, default=(), help="type-II indices")


def _add_grid_args(p: argparse.ArgumentParser):
    g = Grid()
    p.add_argument("--x-min", type=float, default=g.x_min)
    p.add_argument("--x-max", type=float, default=g.x_max)
    p.add_argument("--points", type=int, default=g.points)


def _spec(args) -> SeedSpec:
    return SeedSpec(args.alpha, args.type1, args.type2, args.omega).validate()


def _grid(args) -> Grid:
    return Grid(args.x_min, args.x_max, args.points)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xlag",
        description="Exceptional Laguerre polynomials and rationally extended radial oscillators.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct-g", help="denominator polynomial g of a seed configuration")
    _add_spec_args(p)
    p.add_argument("--output", choices=("json", "pretty"), default="json")

    p = sub.add_parser("construct-eop", help="exceptional Laguerre polynomial at level nu")
    _add_spec_args(p)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--output", choices=("json", "pretty"), default="json")

    p = sub.add_parser("verify", help="run verification suites over the seed sweep")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=5)

    p = sub.add_parser("spectrum", help="numerical bound-state energies")
    _add_spec_args(p)
    _add_grid_args(p)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--conventional", action="store_true",
                   help="solve the conventional potential instead of the extension")
    p.add_argument("--output", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("sweep", help="construct g for every configuration in a box")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=5)
    p.add_argument("--alphas", default="5/2,7/2,9/2,11/2,13/2")
    p.add_argument("--omega", type=_rational, default=Fraction(1))
    return parser


def _emit_json(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_construct_g(args, out) -> int:
    spec = _spec(args)
    doc = {"spec": spec_to_json(spec), "g": g_to_json(spec)}
    if args.output == "json":
        _emit_json(doc, out)
    else:
        res = g_mixed(spec)
        print(f"spec   {spec.label()}", file=out)
        print(f"g      {res.g}", file=out)
        print(f"mu     {res.mu}   leading {res.leading}   nodeless {res.nodeless}", file=out)
    return 0


def cmd_construct_eop(args, out) -> int:
    spec = _spec(args)
    if args.nu < 0:
        raise InvalidSeedSpec("nu must be non-negative")
    r = eop_construct(spec, args.nu)
    doc = {
        "spec": spec_to_json(spec),
        "g": g_to_json(spec),
        "eop": {"n": r.n, "nu": r.nu, "coeffs": poly_to_json(r.y)},
    }
    if args.output == "json":
        _emit_json(doc, out)
    else:
        print(f"spec   {spec.label()}", file=out)
        print(f"n={r.n} nu={r.nu} mu={r.mu}", file=out)
        print(f"y      {r.y}", file=out)
    return 0


def cmd_spectrum(args, out) -> int:
    spec = _spec(args)
    if args.count < 1:
        raise InvalidSeedSpec("count must be positive")
    pot = conventional_potential(spec) if args.conventional else extended_potential(spec)
    res = solve_bound_states(pot, args.count, _grid(args))
    predicted = predicted_energies(spec, args.count)
    if args.output == "json":
        _emit_json({
            "spec": spec_to_json(spec),
            "spectrum": {"energies": list(res.energies), "errors": list(res.richardson_error)},
        }, out)
    elif args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["nu", "energy", "predicted", "abs_error", "richardson_error"])
        for nu, (e, p, r) in enumerate(zip(res.energies, predicted, res.richardson_error)):
            w.writerow([nu, repr(float(e)), repr(float(p)), repr(float(abs(e - p))), repr(float(r))])
    else:
        print(f"spec   {spec.label()}", file=out)
        for nu, (e, p, r) in enumerate(zip(res.energies, predicted, res.richardson_error)):
            print(f"nu={nu}  E={e:.10f}  predicted={p:.10f}  |dE|={abs(e - p):.2e}  rich={r:.2e}",
                  file=out)
    return 0


def cmd_verify(args, out) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    for name in names:
        t0 = time.perf_counter()
        rep = run_suite(name, args.kmax, args.mmax)
        dt = time.perf_counter() - t0
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {name}: {rep.checked} configurations, "
              f"{len(rep.failures)} failures, {dt:.1f}s", file=out)
        for msg in rep.failures[:20]:
            print(f"  {msg}", file=sys.stderr)
        if len(rep.failures) > 20:
            print(f"  ... {len(rep.failures) - 20} more", file=sys.stderr)
        failed |= not rep.ok
    return 1 if failed else 0


def _sweep_entry(spec: SeedSpec) -> dict:
    return {"spec": spec_to_json(spec), "g": g_to_json(spec)}


def cmd_sweep(args, out) -> int:
    try:
        alphas = [parse_fraction(a) for a in args.alphas.split(",") if a.strip()]
    except (ValueError, ZeroDivisionError):
        raise InvalidSeedSpec(f"bad --alphas list {args.alphas!r}") from None
    specs = [s.validate() for s in iter_specs(args.kmax, args.mmax, alphas, args.omega)]
    specs.sort()
    _emit_json(pmap(_sweep_entry, specs), out)
    return 0


COMMANDS = {
    "construct-g": cmd_construct_g,
    "construct-eop": cmd_construct_eop,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (InvalidSeedSpec, SingularPotential, ValueError) as exc:
        print(f"xlag: error: {exc}", file=sys.stderr)
        return 2
    except XlagError as exc:
        print(f"xlag: check failed: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
