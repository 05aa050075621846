"""Command-line entry point.

Subcommands expose each module: ``pmf`` (distribution tables), ``stirling``
(coefficient triangle), ``egf`` (generating-function terms or a point
evaluation), ``simulate`` (seeded Monte Carlo), and ``verify`` (the full
cross-route agreement suite).

Output is deterministic byte-for-byte for identical arguments: CSV uses LF
line endings, '.' decimal separator, and floats with 17 significant digits;
JSON is emitted with a fixed key order.  Exit codes: 0 success, 1
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .distribution import dp_pmf, float_pmf
from .genfun import egf_closed_eval, egf_expand
from .montecarlo import DEFAULT_SHARD_SIZE, SimConfig, compare, simulate
from .stirling import stirling_table
from .verification import DEFAULT_SEED, run_verification

_MASK64 = (1 << 64) - 1


def _fmt(x: float) -> str:
    """Floats with 17 significant digits: round-trip safe, byte-stable."""
    return f"{x:.17g}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _seed64(text: str) -> int:
    value = int(text)
    if not 0 <= value <= _MASK64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _point(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected X,Y")
    return float(parts[0]), float(parts[1])


def _default_workers() -> int:
    env = os.environ.get("COLLECTOR_LAB_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collector-lab",
        description="Coupon collector's distribution: exact tables, generating functions, "
        "simulation, and cross-route verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", metavar="PATH", default=None, help="default: stdout")

    p = sub.add_parser("pmf", parents=[common], help="table of p(n, k) for one m")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n-max", type=_nonneg_int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--float", dest="float_mode", action="store_true")

    p = sub.add_parser("stirling", parents=[common], help="Stirling triangle a(n, k)")
    p.add_argument("--n-max", type=_positive_int, required=True)

    p = sub.add_parser("egf", parents=[common], help="generating-function terms")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--at", type=_point, metavar="X,Y", default=None,
                   help="evaluate the closed form at one point instead")

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo run")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed64, default=DEFAULT_SEED)
    p.add_argument("--shard-size", type=_positive_int, default=DEFAULT_SHARD_SIZE)
    p.add_argument("--workers", type=_positive_int, default=_default_workers())
    p.add_argument("--compare-exact", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run the cross-route check suite")
    p.add_argument("--m-max", type=_positive_int, default=6)
    p.add_argument("--n-max", type=_positive_int, default=12)
    p.add_argument("--trials", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=_seed64, default=DEFAULT_SEED)
    p.add_argument("--workers", type=_positive_int, default=_default_workers())

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)


def _csv(rows: list[list[str]], header: list[str]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_pmf(args: argparse.Namespace) -> int:
    if args.float_mode:
        table = float_pmf(args.m, args.n_max)
        entries = [
            (n, k, None, None, float(table.p[n][k]))
            for n in range(args.n_max + 1)
            for k in range(args.m + 1)
        ]
    else:
        table = dp_pmf(args.m, args.n_max)
        entries = [
            (n, k, q.numerator, q.denominator, float(q))
            for n in range(args.n_max + 1)
            for k, q in enumerate(table.p[n])
        ]
    if args.format == "csv":
        rows = [
            [str(args.m), str(n), str(k),
             "" if num is None else str(num),
             "" if den is None else str(den),
             _fmt(value)]
            for n, k, num, den, value in entries
        ]
        text = _csv(rows, ["m", "n", "k", "p_num", "p_den", "p_float"])
    else:
        text = _json_text([
            {"m": args.m, "n": n, "k": k, "p_num": num, "p_den": den, "p_float": value}
            for n, k, num, den, value in entries
        ])
    _emit(text, args.output)
    return 0


def _cmd_stirling(args: argparse.Namespace) -> int:
    table = stirling_table(args.n_max)
    entries = [(n, k, table.value(n, k)) for n in range(1, args.n_max + 1) for k in range(1, n + 1)]
    if args.format == "csv":
        text = _csv([[str(n), str(k), str(a)] for n, k, a in entries], ["n", "k", "a"])
    else:
        text = _json_text([{"n": n, "k": k, "a": a} for n, k, a in entries])
    _emit(text, args.output)
    return 0


def _cmd_egf(args: argparse.Namespace) -> int:
    if args.at is not None:
        x, y = args.at
        value = egf_closed_eval(args.m, x, y)
        if args.format == "csv":
            text = _csv([[_fmt(x), _fmt(y), _fmt(value)]], ["x", "y", "value"])
        else:
            text = _json_text({"m": args.m, "x": x, "y": y, "value": value})
        _emit(text, args.output)
        return 0
    series = egf_expand(args.m, args.order)
    entries = []
    for n in range(args.order + 1):
        term = series.term(n)
        for k in range(term.degree + 1):
            c = term.coeff(k)
            entries.append((n, k, c.numerator, c.denominator))
    if args.format == "csv":
        text = _csv(
            [[str(n), str(k), str(num), str(den)] for n, k, num, den in entries],
            ["n", "k", "coeff_num", "coeff_den"],
        )
    else:
        text = _json_text([
            {"n": n, "k": k, "coeff_num": num, "coeff_den": den} for n, k, num, den in entries
        ])
    _emit(text, args.output)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    config = SimConfig(m=args.m, n=args.n, trials=args.trials, seed=args.seed,
                       shard_size=args.shard_size)
    emp = simulate(config, workers=args.workers)
    fit = None
    if args.compare_exact:
        fit = compare(emp, dp_pmf(args.m, args.n))
    if args.format == "csv":
        rows = [[str(k), str(emp.counts[k]), _fmt(emp.freqs[k])] for k in range(args.m + 1)]
        text = _csv(rows, ["k", "count", "freq"])
        if fit is not None:
            text += (
                "# compare-exact\n"
                f"# max_abs_deviation,{_fmt(fit.max_abs_deviation)}\n"
                f"# total_variation,{_fmt(fit.total_variation)}\n"
                f"# chi_square,{_fmt(fit.chi_square)}\n"
                f"# dof,{fit.dof}\n"
                f"# bins_used,{fit.bins_used}\n"
            )
    else:
        payload: dict[str, Any] = {
            "config": {"m": args.m, "n": args.n, "trials": args.trials, "seed": args.seed,
                       "shard_size": args.shard_size},
            "rows": [
                {"k": k, "count": emp.counts[k], "freq": emp.freqs[k]}
                for k in range(args.m + 1)
            ],
        }
        if fit is not None:
            payload["compare_exact"] = {
                "max_abs_deviation": fit.max_abs_deviation,
                "total_variation": fit.total_variation,
                "chi_square": fit.chi_square,
                "dof": fit.dof,
                "bins_used": fit.bins_used,
            }
        text = _json_text(payload)
    _emit(text, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(
        m_max=args.m_max,
        n_max=args.n_max,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    if args.format == "json":
        text = _json_text({
            "overall": "pass" if report.passed else "fail",
            "checks": [
                {"name": c.name, "scope": c.scope, "status": c.status, "deviation": c.deviation}
                for c in report.checks
            ],
        })
    else:
        name_w = max(len(c.name) for c in report.checks)
        scope_w = max(len(c.scope) for c in report.checks)
        lines = [
            f"{c.name:<{name_w}}  {c.scope:<{scope_w}}  {c.status:<4}  {c.deviation}"
            for c in report.checks
        ]
        lines.append(f"overall: {'pass' if report.passed else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if report.passed else 1


_DISPATCH = {
    "pmf": _cmd_pmf,
    "stirling": _cmd_stirling,
    "egf": _cmd_egf,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already written the usage message
        return int(exc.code or 0)
    return _DISPATCH[args.command](args)


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
