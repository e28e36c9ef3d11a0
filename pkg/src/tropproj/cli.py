"""Command-line interface: ``tropproj {trop,project,check,generate,bench}``.

Exit status is 0 on success, 1 when the input cannot be parsed or is not in
shape position, and 2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .arith import PrimeContext
from .driver import ALL_STRATEGIES, Instance, Strategy, initial_projections, run
from .errors import InvalidBasis, TropError
from .glue import glue
from .instances import (
    InstanceFormatError,
    basis_from_dict,
    dumps,
    generate,
    instance_to_dict,
    result_from_dict,
    result_to_dict,
)
from .shapegb import diagnose

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _load(args) -> Instance:
    data = _read_json(args.input)
    if isinstance(data, dict) and args.prime is not None:
        data = {**data, "prime": args.prime}
    try:
        basis, ctx = basis_from_dict(data)
        return Instance(basis, ctx)
    except InstanceFormatError as exc:
        raise InputError(str(exc)) from None
    except InvalidBasis as exc:
        raise InputError("; ".join(map(str, exc.diagnostics))) from None


def _strategy(text: str) -> Strategy:
    try:
        return Strategy.parse(text)
    except (ValueError, TropError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_trop(args) -> int:
    inst = _load(args)
    res = run(inst, args.strategy, threads=args.threads)
    _emit(dumps(result_to_dict(res, not args.no_multiplicities)), args.output)
    return EXIT_OK


def cmd_project(args) -> int:
    inst = _load(args)
    if args.inputs:
        ps = [result_from_dict(_read_json(p)) for p in args.inputs]
    else:
        coords = sorted(set(args.coords or []))
        if not coords or not all(0 <= c < inst.n for c in coords):
            raise InputError(f"--coords must name coordinates in 0..{inst.n - 1}")
        initial = initial_projections(inst)
        ps = [initial[c] for c in coords]
    res = ps[0] if len(ps) == 1 else glue(inst.basis, inst.ctx, ps)
    _emit(dumps(result_to_dict(res, not args.no_multiplicities)), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    data = _read_json(args.input)
    try:
        basis, _ = basis_from_dict(data)
    except InstanceFormatError as exc:
        raise InputError(str(exc)) from None
    diags = diagnose(basis)
    _emit("ok\n" if not diags else "".join(f"{d}\n" for d in diags), args.output)
    return EXIT_OK if not diags else EXIT_INPUT


def cmd_generate(args) -> int:
    gen = generate(args.d, args.n, args.seed, PrimeContext(args.prime or 2))
    if gen.retries:
        print(f"redrew {gen.retries} invalid sample(s)", file=sys.stderr)
    _emit(dumps(instance_to_dict(gen.instance)), args.output)
    return EXIT_OK


BENCH_COLUMNS = ["d", "n", "strategy", "seed", "wall_ms", "points", "agree"]


def bench_rows(ds: Sequence[int], ns: Sequence[int], strategies: Sequence[Strategy],
               reps: int, seed: int, prime: int = 2, threads: int = 1) -> list[dict]:
    """One row per (d, n, repetition, strategy); ``agree`` compares all strategies on that instance."""
    rows = []
    for d in ds:
        for n in ns:
            for rep in range(reps):
                s = seed + rep
                inst = generate(d, n, s, PrimeContext(prime)).instance
                cell = []
                for strat in strategies:
                    t0 = time.perf_counter()
                    res = run(inst, strat, threads=threads)
                    ms = (time.perf_counter() - t0) * 1000
                    cell.append((strat, ms, res))
                agree = all(r == cell[0][2] for _, _, r in cell)
                rows += [{"d": d, "n": n, "strategy": str(st), "seed": s,
                          "wall_ms": f"{ms:.3f}", "points": len(r.points),
                          "agree": str(agree).lower()} for st, ms, r in cell]
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(args.d, args.n, args.strategies, args.reps, args.seed,
                      args.prime or 2, args.threads)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.output:
            out.close()
    if any(r["agree"] != "true" for r in rows):
        print("strategies disagree", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None,
                        help="prime for the valuation (default: the file's, else 2)")
    common.add_argument("--strategy", type=_strategy, default=Strategy.parse("overlap"),
                        help="one-projection | sequential | regular-tree=K | overlap")
    common.add_argument("--no-multiplicities", action="store_true",
                        help="report every point with multiplicity 1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="tropproj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trop", parents=[common], help="full tropical variety")
    p.add_argument("input")
    p.set_defaults(func=cmd_trop)

    p = sub.add_parser("project", parents=[common],
                       help="projection onto some coordinates, or one glue of result files")
    p.add_argument("input")
    p.add_argument("--coords", type=_int_list, help="0-based coordinates, e.g. 0,2")
    p.add_argument("--inputs", nargs="+", metavar="RESULT", help="projections to glue")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("check", parents=[common], help="shape-position diagnostics")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", parents=[common], help="random instance")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", parents=[common], help="timing table as CSV")
    p.add_argument("--d", type=_int_list, default=[2, 4])
    p.add_argument("--n", type=_int_list, default=[3])
    p.add_argument("--strategies", type=lambda t: [_strategy(s) for s in t.split(",")],
                   default=list(ALL_STRATEGIES))
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InstanceFormatError, KeyError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # package errors deriving from ValueError describe bad input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TropError as exc:
        # GlueMismatch, NonInvertible and friends cannot occur on valid input
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
