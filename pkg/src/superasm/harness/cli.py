"""Command line entry point: ``superasm gen|solve-scs|assemble|bench|verify``.

Exit codes: 0 success, 1 usage or input error, 2 infeasible assembly. ``verify``
exits 3 when a suite fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..qsim import NoiseConfig, QSim, QueryLedger
from ..scs import ScsConfig, solve_scs
from ..strings import as_symbols, read_instance
from ..tao import TAOInstance, assemble
from . import bench as benchmod
from .gen import GenSpec, gen
from .suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_VERIFY_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload: dict, json_out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if json_out:
        Path(json_out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _noise(args) -> NoiseConfig:
    if not 0.0 <= args.noise_p <= 0.1:
        raise UsageError("--noise-p must lie in [0, 0.1]")
    return NoiseConfig(args.noise_p > 0, args.noise_p, args.seed)


def cmd_gen(args) -> int:
    spec = GenSpec(args.problem, args.n, args.min_len, args.max_len, args.alphabet, args.seed, not args.random, args.m)
    for p in gen(spec, args.out):
        print(p)
    return EXIT_OK


def cmd_solve_scs(args) -> int:
    _noise(args)
    inst = read_instance(args.dictionary)
    cfg = ScsConfig(args.backend, args.alpha, args.seed, args.noise_p, args.repetitions)
    sol = solve_scs(inst, cfg)
    _emit(sol.to_dict(), args.json_out)
    return EXIT_OK


def cmd_assemble(args) -> int:
    noise = _noise(args)
    lines = [ln.strip() for ln in Path(args.text).read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{args.text}: empty text file")
    inst = TAOInstance(as_symbols(lines[0]), read_instance(args.dictionary).strings)
    res = assemble(inst, QSim(QueryLedger(), noise, args.repetitions))
    _emit(res.to_dict(), args.json_out)
    return EXIT_OK if res.feasible else EXIT_INFEASIBLE


def cmd_bench(args) -> int:
    rep = benchmod.BenchReport()
    if args.which in ("graph", "all"):
        benchmod.bench_graph(seed=args.seed, report=rep)
    if args.which in ("tao", "all"):
        benchmod.bench_tao(seed=args.seed, report=rep)
    if args.which in ("cascade", "all"):
        benchmod.bench_cascade(alpha=args.alpha, report=rep)
    if args.csv_out:
        Path(args.csv_out).write_text(rep.to_csv(), encoding="utf-8")
    _emit(rep.to_dict(), args.json_out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = run_suite(args.suite, seed=args.seed)
    for r in results:
        print(r.line())
    if args.json_out:
        payload = {r.name: {"passed": r.passed, "detail": r.detail, "seconds": r.seconds} for r in results}
        Path(args.json_out).write_text(json.dumps(payload, indent=2, default=str) + "\n", encoding="utf-8")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superasm", description="Exact superstring solving and text assembly with query-cost ledgers.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0, help="seed for every random choice")
        sp.add_argument("--json-out", help="write the JSON result here instead of stdout")

    g = sub.add_parser("gen", help="write a seeded random instance")
    common(g)
    g.add_argument("problem", choices=["scs", "tao"])
    g.add_argument("--out", required=True, help="output directory")
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--min-len", type=int, default=4)
    g.add_argument("--max-len", type=int, default=8)
    g.add_argument("--alphabet", type=int, default=4)
    g.add_argument("--m", type=int, default=64, help="approximate text length (tao)")
    g.add_argument("--random", action="store_true", help="tao: random rather than planted-feasible")
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("solve-scs", help="shortest common superstring of a dictionary file")
    common(s)
    s.add_argument("dictionary")
    s.add_argument("--backend", choices=["hash", "allones"], default="hash")
    s.add_argument("--alpha", type=float, default=0.055)
    s.add_argument("--noise-p", type=float, default=0.0)
    s.add_argument("--repetitions", type=int, default=1)
    s.set_defaults(fn=cmd_solve_scs)

    a = sub.add_parser("assemble", help="cover a text with dictionary strings")
    common(a)
    a.add_argument("text", help="file whose first line is the text")
    a.add_argument("dictionary")
    a.add_argument("--noise-p", type=float, default=0.0)
    a.add_argument("--repetitions", type=int, default=1)
    a.set_defaults(fn=cmd_assemble)

    b = sub.add_parser("bench", help="ledger cost grids and exponent fits")
    common(b)
    b.add_argument("which", nargs="?", choices=["graph", "tao", "cascade", "all"], default="all")
    b.add_argument("--alpha", type=float, default=0.055)
    b.add_argument("--csv-out")
    b.set_defaults(fn=cmd_bench)

    v = sub.add_parser("verify", help="run a named verification suite")
    common(v)
    v.add_argument("suite", help=f"all or one of: {', '.join(SUITES)}")
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"superasm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
