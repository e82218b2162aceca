"""Command-line front end.

Exit codes: 0 ok, 2 degenerate sequence or violated hypothesis, 3 unreadable
``--seq``, 4 zero term in an abc triple, 5 factorization timeout (partial
report still printed), 10 fixed-x search capped below the theorem bound,
64 usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .abclab import scan_quality, triple, xy_pair
from .bounds import derive_constants, search_bound
from .errors import (DegenerateSequence, FactorizationTimeout, HypothesisViolated, InvalidInput,
                     ZeroTerm)
from .interval import DEFAULT_PRECISION
from .presets import SequenceParseError, parse_sequence, resolve_sequence
from .recurrence import N_MAX_HARD, check_nondegenerate
from .report import AbcReport, BoundReport, FamilyReport, encode, render
from .solver import brute_search, family_members, solve_fixed_x

EXIT_OK = 0
EXIT_DEGENERATE = 2
EXIT_PARSE = 3
EXIT_ZERO_TERM = 4
EXIT_TIMEOUT = 5
EXIT_CAPPED = 10
EXIT_USAGE = 64

DEFAULTS = {"seq": "fibonacci", "precision": DEFAULT_PRECISION, "n_cap": N_MAX_HARD,
            "factor_budget_ms": 2000, "output": "json", "workers": 1}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    sequence: str
    precision_bits: int
    n_cap: int
    factor_budget_ms: int
    output: str
    workers: int

    @property
    def factor_budget_s(self) -> float | None:
        return None if self.factor_budget_ms <= 0 else self.factor_budget_ms / 1000


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _base(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"x must be >= 2, got {text}")
    return v


def _add_global(p: argparse.ArgumentParser, suppress: bool):
    # subcommands repeat the global flags; SUPPRESS keeps values given before the subcommand
    d = (lambda key: argparse.SUPPRESS) if suppress else DEFAULTS.get
    p.add_argument("--seq", default=d("seq"),
                   help="preset name or P,Q,U0,U1 (default: fibonacci)")
    p.add_argument("--precision", type=_positive, default=d("precision"),
                   help="starting interval precision in bits (default: 128)")
    p.add_argument("--n-cap", type=_nonneg, default=d("n_cap"),
                   help="largest index n to enumerate (default: 10^6)")
    p.add_argument("--factor-budget-ms", type=int, default=d("factor_budget_ms"),
                   help="time budget per factorization, 0 for none (default: 2000)")
    p.add_argument("--output", choices=("json", "jsonl", "csv", "pretty"), default=d("output"))
    p.add_argument("--workers", type=_positive, default=d("workers"),
                   help="worker processes for scans (default: 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rpl", description="Perfect powers among sums of two terms of a "
                     "binary recurrence: certified bounds, solvers and abc exploration.")
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="certified constant trace and search bound N for base x")
    _add_global(p, True)
    p.add_argument("--x", type=_base, required=True)

    p = sub.add_parser("solve", help="all solutions of U_n + U_m = x^q for one base x")
    _add_global(p, True)
    p.add_argument("--x", type=_base, required=True)

    p = sub.add_parser("search", help="every perfect power U_n + U_m with n <= n-cap")
    _add_global(p, True)

    p = sub.add_parser("abc", help="X/Y record and abc triple for one pair (n, m)")
    _add_global(p, True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--no-coprime", action="store_true",
                   help="keep any residual common factor of the triple")

    p = sub.add_parser("abc-scan", help="rank abc-triple qualities over m <= n <= n-cap")
    _add_global(p, True)
    p.add_argument("--top", type=_nonneg, default=0, help="keep the best K triples (0: all)")
    p.add_argument("--epsilon", type=float, default=None,
                   help="also count triples with quality above 1 + epsilon (reporting only)")

    p = sub.add_parser("family", help="the square family (4k, 0, U_2k, 2) for U0 = 2, U1 = P")
    _add_global(p, True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k-max", type=_positive, required=True)

    p = sub.add_parser("check", help="run the non-degeneracy checks on a sequence")
    _add_global(p, True)
    return parser


def _config(args) -> RunConfig:
    return RunConfig(args.seq, args.precision, args.n_cap, args.factor_budget_ms,
                     args.output, args.workers)


def _emit(obj, cfg: RunConfig, out):
    out.write(render(encode(obj), cfg.output))


def cmd_bound(cfg: RunConfig, x: int, out=sys.stdout) -> int:
    seq = resolve_sequence(cfg.sequence)
    bounds = derive_constants(seq, cfg.precision_bits)
    N = search_bound(seq, x, cfg.precision_bits)
    _emit(BoundReport(seq, x, N, bounds), cfg, out)
    return EXIT_OK


def cmd_solve(cfg: RunConfig, x: int, out=sys.stdout) -> int:
    seq = resolve_sequence(cfg.sequence)
    res = solve_fixed_x(seq, x, cfg.n_cap, precision_bits=cfg.precision_bits,
                        workers=cfg.workers)
    _emit(res, cfg, out)
    return EXIT_OK if res.certified_complete else EXIT_CAPPED


def cmd_search(cfg: RunConfig, out=sys.stdout) -> int:
    seq = resolve_sequence(cfg.sequence)
    _emit(brute_search(seq, cfg.n_cap), cfg, out)
    return EXIT_OK


def cmd_abc(cfg: RunConfig, n: int, m: int, enforce_coprime: bool = True,
            out=sys.stdout) -> int:
    if n < m:
        raise UsageError(f"need n >= m, got n = {n}, m = {m}")
    seq = resolve_sequence(cfg.sequence)
    rec = xy_pair(seq, n, m)
    try:
        t = triple(seq, n, m, enforce_coprime, cfg.factor_budget_s)
    except FactorizationTimeout as exc:
        _emit(AbcReport(seq, rec, exc.payload), cfg, out)
        raise
    _emit(AbcReport(seq, rec, t), cfg, out)
    return EXIT_OK


def cmd_abc_scan(cfg: RunConfig, top: int = 0, epsilon: float | None = None,
                 out=sys.stdout) -> int:
    seq = resolve_sequence(cfg.sequence)
    rep = scan_quality(seq, cfg.n_cap, top or None, cfg.factor_budget_s,
                       workers=cfg.workers, epsilon=epsilon)
    _emit(rep, cfg, out)
    return EXIT_TIMEOUT if rep.incomplete else EXIT_OK


def cmd_family(cfg: RunConfig, P: int, Q: int, k_max: int, out=sys.stdout) -> int:
    members = family_members(P, Q, k_max)
    _emit(FamilyReport(P, Q, k_max, members), cfg, out)
    return EXIT_OK


def cmd_check(cfg: RunConfig, out=sys.stdout) -> int:
    params, _ = parse_sequence(cfg.sequence)
    rep = check_nondegenerate(*params)
    _emit(rep, cfg, out)
    return EXIT_OK if rep.ok else EXIT_DEGENERATE


def _dispatch(args, out) -> int:
    cfg = _config(args)
    cmd = args.command
    if cmd == "bound":
        return cmd_bound(cfg, args.x, out)
    if cmd == "solve":
        return cmd_solve(cfg, args.x, out)
    if cmd == "search":
        return cmd_search(cfg, out)
    if cmd == "abc":
        return cmd_abc(cfg, args.n, args.m, not args.no_coprime, out)
    if cmd == "abc-scan":
        return cmd_abc_scan(cfg, args.top, args.epsilon, out)
    if cmd == "family":
        return cmd_family(cfg, args.p, args.q, args.k_max, out)
    if cmd == "check":
        return cmd_check(cfg, out)
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out)
    except SequenceParseError as exc:
        print(f"rpl: cannot parse sequence: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegenerateSequence, HypothesisViolated) as exc:
        print(f"rpl: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ZeroTerm as exc:
        print(f"rpl: {exc}", file=sys.stderr)
        return EXIT_ZERO_TERM
    except FactorizationTimeout as exc:
        print(f"rpl: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (UsageError, InvalidInput) as exc:
        print(f"rpl: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
