"""Compare the compiled and pure-Python partition-scanning kernels.

Two workloads:
  scan   first resolving / RD partition at the minimum size, every connected
         graph of the given order (what the solvers spend their time on)
  count  count every RD partition with k parts of one larger graph (a full
         restricted-growth sweep with no early exit)

    python benchmarks/bench_kernels.py --order 7 --count-graph cycle:10 --count-k 4
"""

from __future__ import annotations

import argparse
import time

from partdim import _pykernels
from partdim.enumeration import enumerate_connected
from partdim.families import generate
from partdim.graph import distances
from partdim.solvers import dominating_partition_dimension, partition_dimension

try:
    from partdim import _ckernels
except ImportError:
    _ckernels = None


def scan_workload(order: int):
    jobs = []
    for g in enumerate_connected(order):
        dm = distances(g)
        bp = partition_dimension(g, dm)[0]
        ep = dominating_partition_dimension(g, dm)[0]
        jobs.append((dm.flat, g.adj, g.n, bp, False))
        jobs.append((dm.flat, g.adj, g.n, ep, True))
    return jobs


def run_scan(mod, jobs) -> tuple[float, list]:
    start = time.perf_counter()
    out = [mod.find_partitions(d, a, n, k, dom) for d, a, n, k, dom in jobs]
    return time.perf_counter() - start, out


def run_count(mod, g, k: int) -> tuple[float, int]:
    dm = distances(g)
    start = time.perf_counter()
    total = mod.count_partitions(dm.flat, g.adj, g.n, k, True)
    return time.perf_counter() - start, total


def best_of(fn, repeat: int):
    runs = [fn() for _ in range(repeat)]
    return min(r[0] for r in runs), runs[0][1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=7)
    ap.add_argument("--count-graph", default="cycle:10")
    ap.add_argument("--count-k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python fallback only")

    jobs = scan_workload(args.order)
    g = generate(args.count_graph)
    results = {}
    for name, mod in backends:
        t_scan, found = best_of(lambda: run_scan(mod, jobs), args.repeat)
        t_count, total = best_of(lambda: run_count(mod, g, args.count_k), args.repeat)
        results[name] = (t_scan, t_count, found, total)
        print(f"{name:7s} scan n={args.order} ({len(jobs)} calls): {t_scan:8.3f}s   "
              f"count {args.count_graph} k={args.count_k} -> {total}: {t_count:8.3f}s")

    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        if py[2] != cy[2] or py[3] != cy[3]:
            raise SystemExit("backends disagree")
        print(f"speedup: scan x{py[0] / cy[0]:.1f}, count x{py[1] / cy[1]:.1f} (results identical)")


if __name__ == "__main__":
    main()
