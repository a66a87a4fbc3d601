"""Command-line interface: ``partdim compute|augment|verify|generate``.

Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .constructions import ConstructionError, rd_augment
from .enumeration import ENUM_MAX_ORDER, enumerate_connected
from .families import FamilyError, FamilySpec, generate, lambda_family
from .graph import Graph, GraphError, is_connected, parse_graph6
from .partition import Partition, PartitionError
from .solvers import CSV_HEADER, ParamRecord, compute_all
from .verification import CheckError, Corpus, RecordStore, reports_json, resolve_checks, run_suite, summary_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
WORKERS_ENV = "PARTDIM_WORKERS"


class UsageError(Exception):
    pass


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
        if value < 1:
            raise UsageError(f"{WORKERS_ENV} must be at least 1")
        return value
    return os.cpu_count() or 1


def _workers(args) -> int:
    if getattr(args, "deterministic", False):
        return 1
    if args.workers is not None:
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        return args.workers
    return default_workers()


def compute_records(graphs: list[Graph], workers: int = 1) -> list[ParamRecord]:
    """Records in input order; the pool only changes who computes them."""
    if workers <= 1 or len(graphs) < 2:
        return [compute_all(g) for g in graphs]
    chunk = max(1, len(graphs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(compute_all, graphs, chunksize=chunk))


# --------------------------------------------------------------------------
# input


def _family_graphs(text: str) -> list[Graph]:
    name, _, arg = text.partition(":")
    if name.strip().lower() == "lambda":
        try:
            return lambda_family(int(arg))
        except ValueError:
            raise FamilyError(f"bad order in {text!r}") from None
    return [generate(FamilySpec.parse(text))]


def _read_graph_file(path: str) -> list[Graph]:
    graphs = []
    try:
        fh = open(path, "rb")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                raise UsageError(f"{path}:{lineno}: {exc}") from None
            if not is_connected(g):
                raise UsageError(f"{path}:{lineno}: graph {g.graph6} is disconnected")
            graphs.append(g)
    return graphs


def read_input(args) -> list[Graph]:
    sources = [s for s in (args.g6, args.file, args.family) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --g6, --file, --family")
    try:
        if args.g6:
            graphs = []
            for i, text in enumerate(args.g6, 1):
                try:
                    g = parse_graph6(text)
                except GraphError as exc:
                    raise UsageError(f"--g6 #{i}: {exc}") from None
                if not is_connected(g):
                    raise UsageError(f"--g6 #{i}: graph {g.graph6} is disconnected")
                graphs.append(g)
            return graphs
        if args.file:
            return _read_graph_file(args.file)
        return _family_graphs(args.family)
    except (FamilyError, GraphError) as exc:
        raise UsageError(str(exc)) from None


def parse_orders(text: str) -> list[int]:
    """``"7"``, ``"3-7"`` or ``"3,5,7"``."""
    out: set[int] = set()
    try:
        for piece in text.split(","):
            lo, sep, hi = piece.strip().partition("-")
            if sep:
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(lo))
    except ValueError:
        raise UsageError(f"bad order range {text!r}") from None
    if not out or min(out) < 1:
        raise UsageError(f"bad order range {text!r}")
    return sorted(out)


# --------------------------------------------------------------------------
# output


def format_records(records: list[ParamRecord], fmt: str) -> str:
    if fmt == "json":
        return "".join(r.to_json() + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.csv_row())
        return buf.getvalue()
    rows = [list(CSV_HEADER)] + [[str(x) for x in r.csv_row()] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_HEADER))]
    return "".join("  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths))).rstrip() + "\n" for row in rows)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    graphs = read_input(args)
    for g in graphs:
        if g.n < 2:
            raise UsageError(f"graph {g.graph6} has order 1; parameters need n >= 2")
    records = compute_records(graphs, _workers(args))
    _emit(format_records(records, args.format), args.output)
    return EXIT_OK


def cmd_augment(args) -> int:
    graphs = read_input(args)
    if len(graphs) != 1:
        raise UsageError("augment takes exactly one graph")
    (g,) = graphs
    try:
        p = Partition.parse(args.partition, n=g.n)
    except PartitionError as exc:
        raise UsageError(f"bad partition {args.partition!r}: {exc}") from None
    try:
        out = rd_augment(g, p)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from None
    _emit(f"{out}\nsize {out.k}\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        names = resolve_checks(args.checks.split(","))
    except CheckError as exc:
        raise UsageError(exc.args[0]) from None
    orders = parse_orders(args.orders) if args.orders else None
    if args.corpus:
        try:
            corpus = Corpus.from_file(args.corpus, exhaustive=True if args.exhaustive else None)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        if orders:
            corpus.graphs = [g for g in corpus.graphs if g.n in orders]
    else:
        if not orders:
            raise UsageError("give --orders or --corpus")
        beyond = [n for n in orders if n > ENUM_MAX_ORDER]
        if beyond:
            raise UsageError(
                f"order {beyond[0]} is beyond built-in enumeration (max {ENUM_MAX_ORDER}); "
                "pass a graph6 file with --corpus"
            )
        corpus = Corpus.from_orders(orders)
    deterministic = args.deterministic
    workers = _workers(args)
    eligible = [g for g in corpus.graphs if g.n >= 2]
    records = RecordStore(dict(zip((g.graph6 for g in eligible), compute_records(eligible, workers))))
    reports = run_suite(corpus, names, records)
    timing = not deterministic
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(reports_json(reports, timing))
    sys.stdout.write(summary_table(reports, timing))
    if not args.quiet:
        for r in reports:
            for text in r.notes:
                if len(text) > 160:
                    text = text[:157] + "..."
                sys.stdout.write(f"  {r.code} {r.id}: {text}\n")
            for g6, details in r.counterexamples[: args.max_examples]:
                sys.stdout.write(f"  {r.code} {r.id}: {g6}  {details}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_generate(args) -> int:
    if bool(args.family) == (args.enumerate is not None):
        raise UsageError("give exactly one of --family, --enumerate")
    try:
        if args.family:
            graphs = _family_graphs(args.family)
        else:
            graphs = list(enumerate_connected(args.enumerate))
    except (FamilyError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    _emit("".join(g.graph6 + "\n" for g in graphs), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", help="inline graph6 string (repeatable)")
    p.add_argument("--file", help="file of graph6 lines")
    p.add_argument("--family", help='family spec such as "path:9", "h11:8", "caterpillar:2,3", "lambda:7"')
    p.add_argument("--output", "-o", help="write here instead of stdout")


def _pool_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, help=f"worker processes (default: ${WORKERS_ENV} or CPU count)")
    p.add_argument("--deterministic", action="store_true", help="single worker, no timings in output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partdim", description="Resolving and RD partitions of small graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute beta_p, eta_p, beta, gamma, eta, gamma_p")
    _input_flags(p)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    _pool_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("augment", help="turn a resolving partition into an RD-partition")
    _input_flags(p)
    p.add_argument("--partition", required=True, help='parts separated by "|", e.g. "0,1|2|3"')
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("verify", help="run named checks over a corpus")
    p.add_argument("--orders", help='orders to enumerate, e.g. "3-7"')
    p.add_argument("--checks", default="all", help='comma-separated check names or codes, or "all"')
    p.add_argument("--corpus", help="graph6 file to check instead of enumerating")
    p.add_argument("--exhaustive", action="store_true", help="treat the corpus as all classes of its orders")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--max-examples", type=int, default=5, help="counterexamples printed per check")
    p.add_argument("--quiet", action="store_true", help="summary table only")
    _pool_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="print graph6 for a family or all connected graphs of an order")
    p.add_argument("--family", help='family spec, or "lambda:N" for the seventeen H graphs')
    p.add_argument("--enumerate", type=int, metavar="N", help="all connected graphs of order N")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"partdim {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
