"""Command-line front end.

    equisum solve --n 45 --k 9 --no-meander
    equisum verify --input partition.json
    equisum enumerate --n 16 --format csv
    equisum oracle --n 9 --k 5
    equisum bench --n 1000 --n 10000 --reps 5

Exit codes: 0 ok, 1 negative verdict, 2 infeasible instance or violated
precondition, 3 arithmetic overflow, 4 malformed input, 5 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import meander, oracle, pisolve
from .core import (
    ArithmeticOverflowError,
    EquisumError,
    InfeasibleSumError,
    InfeasibleTargetError,
    Instance,
    MalformedInputError,
    Partitioning,
    delta,
    enumerate_feasible,
    from_json,
    largest_feasible_k,
    make_instance,
    to_json,
    verify,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INFEASIBLE = 2
EXIT_OVERFLOW = 3
EXIT_MALFORMED = 4
EXIT_BUDGET = 5

BENCH_COLUMNS = ["n", "k", "t", "meander_stop", "rep", "wall_ns", "steps"]


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def resolve_instance(n: int, k: int, t: int | None) -> Instance:
    """Derive t from (n, k) when omitted, cross-check it when given."""
    total = delta(n)
    if t is None:
        if k < 1 or total % k:
            raise InfeasibleSumError(f"k = {k} does not divide delta({n}) = {total}")
        t = total // k
    return make_instance(n, k, t)


# -- rendering ------------------------------------------------------------


def _fmt_set(elems) -> str:
    return "{" + ", ".join(map(str, elems)) + "}"


def render_partitioning(p: Partitioning, fmt: str) -> str:
    if fmt == "json":
        return to_json(p)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["container", "sum", "elements"])
        for j, c in enumerate(p.containers, start=1):
            writer.writerow([j, sum(c), " ".join(map(str, c))])
        return buf.getvalue().rstrip("\n")
    lines = [str(p.instance)]
    for j, c in enumerate(p.containers, start=1):
        lines.append(f"T_{j} = {_fmt_set(c)}")
    return "\n".join(lines)


def _write_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    header = list(rows[0])
    table = [header] + [[str(r[h]) for h in header] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in table)


# -- subcommands ----------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    inst = resolve_instance(args.n, args.k, args.t)
    on_step = (lambda s: print(s.describe(), file=sys.stderr)) if args.trace else None
    trace = pisolve.solve_trace(inst, use_meander_stop=not args.no_meander, on_step=on_step)
    print(render_partitioning(trace.partitioning, args.format))
    step = trace.meander_step
    if args.show_matrix and step is not None:
        headers = [f"T_{r}" for r, _ in step.placements]
        print(step.matrix.render(headers))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    path = args.input or args.path
    if path is None:
        raise CliError("verify needs --input <path>", EXIT_INFEASIBLE)
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    report = verify(from_json(text))
    if args.format == "json":
        print(json.dumps(asdict(report)))
    elif report.valid:
        print("valid")
    else:
        print("invalid")
        for line in report.describe():
            print(f"  {line}")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def enumerate_rows(n: int) -> list[dict]:
    gauss = meander.gauss_params(n)
    return [
        {
            "k": k,
            "t": t,
            "meander_applicable": meander.meander_applicable(n, k),
            "is_gauss": (k, t) == (gauss.k_G, gauss.t_G),
        }
        for k, t in enumerate_feasible(n)
    ]


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError("n must be positive", EXIT_INFEASIBLE)
    print(_write_rows(enumerate_rows(args.n), args.format))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    total = delta(args.n)
    t = args.t
    if t is None:
        if args.k < 1 or total % args.k:
            raise InfeasibleSumError(f"k = {args.k} does not divide delta({args.n}) = {total}")
        t = total // args.k
    limits = oracle.OracleLimits(max_n=args.max_n, max_nodes=args.max_nodes)
    result = oracle.brute_force_solve(args.n, args.k, t, limits)
    if result is None:
        print(f"no partitioning exists for Pi({args.n};{args.k},{t})")
        return EXIT_NEGATIVE
    print(render_partitioning(result, args.format))
    return EXIT_OK


@dataclass(frozen=True)
class BenchRecord:
    n: int
    k: int
    t: int | None
    meander_stop: bool
    rep: int
    wall_ns: int | None
    steps: int
    error: str | None = None


def run_bench(ns: list[int], k: int | None, reps: int, meander_stop: bool) -> list[BenchRecord]:
    """Time the solver; infeasible entries become error records."""
    records = []
    for n in sorted(ns):
        try:
            kk = k if k is not None else largest_feasible_k(n)
            inst = resolve_instance(n, kk, None)
        except EquisumError as exc:
            records.append(BenchRecord(n, k or 0, None, meander_stop, 0, None, 0, str(exc)))
            continue
        for rep in range(reps):
            start = time.perf_counter_ns()
            trace = pisolve.solve_trace(inst, use_meander_stop=meander_stop)
            elapsed = time.perf_counter_ns() - start
            records.append(BenchRecord(n, inst.k, inst.t, meander_stop, rep, elapsed, len(trace.steps)))
            del trace
    return records


def cmd_bench(args: argparse.Namespace) -> int:
    ns = list(args.n or [])
    if args.n_max is not None:
        ns.extend(range(args.stride, args.n_max + 1, args.stride))
    if not ns:
        raise CliError("bench needs --n or --n-max", EXIT_INFEASIBLE)
    records = run_bench(ns, args.k, args.reps, not args.no_meander)

    if args.format == "json":
        print(json.dumps([asdict(r) for r in records]))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for r in records:
            row = [r.n, r.k, r.t, int(r.meander_stop), r.rep, r.wall_ns, r.steps]
            writer.writerow(["" if v is None else v for v in row])

    by_n: dict[int, list[int]] = {}
    for r in records:
        if r.error:
            print(f"n={r.n}: error: {r.error}", file=sys.stderr)
        else:
            by_n.setdefault(r.n, []).append(r.wall_ns)
    for n, times in by_n.items():
        print(f"n={n} median_ns={int(statistics.median(times))}", file=sys.stderr)
    return EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equisum", description="Equal-sum partitioning of 1..n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=["text", "json", "csv"], default=default)

    p = sub.add_parser("solve", help="construct a (k,t)-partitioning of 1..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--no-meander", action="store_true", help="disable the meander early stop")
    p.add_argument("--show-matrix", action="store_true", help="print the meander grid if one was used")
    p.add_argument("--trace", action="store_true", help="log each recursion step to stderr")
    add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partitioning stored as JSON")
    p.add_argument("path", nargs="?")
    p.add_argument("--input")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list feasible (k,t) pairs for n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force search (small n only)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--max-n", type=int, default=oracle.OracleLimits.max_n)
    p.add_argument("--max-nodes", type=int, default=oracle.OracleLimits.max_nodes)
    add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time the solver, CSV on stdout")
    p.add_argument("--n", type=int, action="append", help="instance size; repeatable")
    p.add_argument("--n-max", type=int)
    p.add_argument("--stride", type=int, default=1000)
    p.add_argument("--k", type=int, help="default: largest feasible k for each n")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--no-meander", action="store_true")
    add_format(p, default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ArithmeticOverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except MalformedInputError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except oracle.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InfeasibleSumError as exc:
        print(f"infeasible-sum: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InfeasibleTargetError as exc:
        print(f"infeasible-target: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (EquisumError, ValueError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
