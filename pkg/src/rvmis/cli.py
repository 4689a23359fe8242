"""Command line entry point: ``rvmis gen|solve|verify|bench``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import harness
from .checks import check_instance
from .errors import ConfigError, DimacsParseError, InvariantBreach, PreconditionError
from .exact import BNB_LIMIT, max_recoverable_value, mwis_value
from .graph import weight_of
from .io import read_dimacs, write_dimacs

log = logging.getLogger("rvmis")

DIMACS_SUFFIXES = (".dimacs", ".col", ".gr")


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def cmd_gen(args) -> int:
    spec = {"family": args.family, "params": dict(args.param), "seed": args.seed}
    inst = harness.build_instance(spec)
    text = write_dimacs(inst.graph, inst.weights, [inst.label, f"seed {args.seed}"])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args) -> int:
    try:
        inst = read_dimacs(Path(args.file).read_text())
    except OSError as exc:
        raise ConfigError(str(exc)) from exc
    if args.algo not in harness.ALGORITHMS:
        raise ConfigError(f"unknown algorithm {args.algo!r}; known: {sorted(harness.ALGORITHMS)}")
    algo = harness.ALGORITHMS[args.algo]
    if algo.needs_coloring:
        raise ConfigError(f"{args.algo} needs a colouring, which DIMACS files do not carry; use 'bench'")
    if args.variant is not None and args.variant not in algo.variants:
        raise ConfigError(f"algorithm {args.algo!r} has no variant {args.variant!r}")
    g, w = inst.graph, inst.weights
    wrapped = harness.Instance(args.file, "file", {"path": args.file}, None, g, w)
    out = {"algorithm": args.algo, "variant": args.variant, "n": g.n, "m": g.m}
    if algo.trials is None:
        members = algo.run(wrapped, args.variant)
    else:
        if algo.name == "plg" and w is not None:
            raise ConfigError("plg solves unweighted MIS; the file carries weights")
        members = algo.single(wrapped, args.variant, args.seed)
        out["seed"] = args.seed
    members = g.check_independent(members)
    out["set"] = [v + 1 for v in sorted(members)]
    out["weight"] = str(weight_of(members, w))
    if g.n <= args.oracle_limit:
        out["oracle"] = str(mwis_value(g, w))
        out[f"max_rv@{args.rho}"] = str(max_recoverable_value(g, args.rho, w))
    print(json.dumps(out, indent=2))
    return 0


def cmd_verify(args) -> int:
    root = Path(args.directory)
    files = sorted(p for p in root.iterdir() if p.suffix in DIMACS_SUFFIXES) if root.is_dir() else []
    if not files:
        raise ConfigError(f"no DIMACS files ({', '.join(DIMACS_SUFFIXES)}) in {root}")
    for p in files:
        inst = read_dimacs(p.read_text())
        try:
            passed = check_instance(inst.graph, inst.weights, args.oracle_limit)
        except InvariantBreach as exc:
            print(f"FAIL {p.name}: {exc}")
            raise
        print(f"ok   {p.name}: " + "; ".join(passed))
    return 0


def cmd_bench(args) -> int:
    try:
        config = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    text = harness.emit_report(harness.run_experiment(config), args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rvmis", description="Independent-set approximation toolkit.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an instance as DIMACS")
    p.add_argument("family", choices=sorted(f for f in harness.FAMILIES if f != "file"))
    p.add_argument("--param", "-p", action="append", type=_param, default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run one algorithm on a DIMACS file")
    p.add_argument("file")
    p.add_argument("--algo", required=True)
    p.add_argument("--variant")
    p.add_argument("--rho", type=_fraction, default=Fraction(7, 3))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-limit", type=int, default=BNB_LIMIT)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the invariant checks on every DIMACS file in a directory")
    p.add_argument("directory")
    p.add_argument("--oracle-limit", type=int, default=24)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run an experiment config and print the report")
    p.add_argument("config")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InvariantBreach as exc:
        log.error("invariant breach: %s", exc)
        return 2
    except (ConfigError, DimacsParseError, PreconditionError, OSError) as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
