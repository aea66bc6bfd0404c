"""Command-line front end: ``orbitkit <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .fields import CharacteristicTwoError, Field, field_from_spec, is_prime
from .lie import NilradicalPoint
from .orbits import catalog, catalog_json, classify, descriptor, hasse_dot, hasse_edges, transporter

COMMANDS = ("classify", "table", "hasse", "verify", "enumerate", "transport")


def _field(parser: argparse.ArgumentParser, spec: str) -> Field:
    try:
        return field_from_spec(spec)
    except CharacteristicTwoError as exc:
        parser.error(f"--field {spec}: {exc}")
    except ValueError as exc:
        parser.error(str(exc))


def _prime(parser: argparse.ArgumentParser, p: int) -> int:
    if p == 2:
        parser.error(f"--prime 2: {CharacteristicTwoError()}")
    if not is_prime(p):
        parser.error(f"--prime {p}: not a prime")
    return p


def _point(parser: argparse.ArgumentParser, text: str | None, F: Field) -> NilradicalPoint:
    if text is None:
        parser.error("--point is required")
    try:
        return NilradicalPoint.parse(text, F)
    except (ValueError, ZeroDivisionError) as exc:
        parser.error(f"bad --point {text!r}: {exc}")


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("ORBITKIT_SEED", "0"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="'Q' or 'Fp:<prime>' (default Q)")
    common.add_argument("--point", help="comma-separated coordinates a1,a2,a3,a4")
    common.add_argument("--prime", type=int, help="odd prime for enumeration")
    common.add_argument("--seed", type=int, help="random seed (falls back to $ORBITKIT_SEED, then 0)")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--samples", type=int, help="random samples per formula check, halved for transporters (default 1000)")

    parser = argparse.ArgumentParser(prog="orbitkit", description="Borel orbits on the nilradical of so_5.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "classify": "orbit, dimension and defining equations of a point",
        "table": "the seven-orbit table",
        "hasse": "closure-order Hasse diagram",
        "verify": "run every verification check",
        "enumerate": "brute-force B(F_p)-orbit census",
        "transport": "group element carrying the orbit representative to a point",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    cmd = args.command

    def emit(text: str) -> None:
        print(text, file=out)

    if args.format == "dot" and cmd != "hasse":
        parser.error("--format dot is only available for hasse")

    if cmd == "classify":
        F = _field(parser, args.field)
        v = _point(parser, args.point, F)
        d = descriptor(classify(v))
        if args.format == "json":
            emit(json.dumps({"field": F.tag, "point": str(v), **d.to_dict(),
                             "equations": d.equations()}, ensure_ascii=False))
        else:
            emit(f"{d.id.value}, dim {d.dim}, {d.equations()}")
        return 0

    if cmd == "table":
        if args.format == "json":
            emit(catalog_json())
        else:
            rows = [("representative", "orbit", "defining equations", "dim")]
            rows += [(d.to_dict()["representative"], d.id.value, d.equations(), str(d.dim)) for d in catalog()]
            widths = [max(len(r[i]) for r in rows) for i in range(4)]
            for r in rows:
                emit("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return 0

    if cmd == "hasse":
        edges = hasse_edges()
        if args.format == "dot":
            emit(hasse_dot())
        elif args.format == "json":
            emit(json.dumps([[hi.value, lo.value] for hi, lo in edges]))
        else:
            for hi, lo in edges:
                emit(f"{hi.value} -> {lo.value}")
        return 0

    if cmd == "transport":
        F = _field(parser, args.field)
        v = _point(parser, args.point, F)
        orbit = classify(v)
        w = transporter(orbit, v)
        if args.format == "json":
            emit(json.dumps({"orbit": orbit.value, "target": str(v), "word": None if w is None else str(w)}))
        elif w is None:
            emit(f"{orbit.value}: no witness in base field")
        else:
            emit(f"{orbit.value}: {w}")
        return 0

    # heavier commands import the verification machinery lazily
    from .verify import enumerate_orbits, run_all

    if cmd == "enumerate":
        if args.prime is None:
            parser.error("enumerate needs --prime")
        p = _prime(parser, args.prime)
        try:
            census = enumerate_orbits(p)
        except ValueError as exc:
            parser.error(str(exc))
        if args.format == "json":
            emit(census.to_json())
        else:
            emit(f"p = {p}: {census.orbit_count} orbits on {p**4} points")
            for o in census.orbits:
                emit(f"  {o.classifier_class.value:<13} size {o.size:>6}  rep {o.representative}")
        return 0

    # verify
    seed = _seed(args)
    samples = 1000 if args.samples is None else args.samples
    if samples < 1:
        parser.error("--samples must be at least 1")
    if args.prime is not None:
        p = _prime(parser, args.prime)
        if p > 13:
            parser.error("enumeration is capped at p <= 13")
        reports = run_all(seed=seed, samples=samples, closure_prime=p, primes=(p,),
                          transport_samples=max(1, samples // 2))
    else:
        reports = run_all(seed=seed, samples=samples, transport_samples=max(1, samples // 2))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        emit(json.dumps({r.name: r.to_list() for r in reports}, indent=2, ensure_ascii=False))
    else:
        for r in reports:
            emit(r.summary())
        emit("all checks passed" if ok else "VERIFICATION FAILED")
    return 0 if ok else 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
