#!/usr/bin/env python3
"""Benchmark the compiled subset-scan kernels against the pure-Python fallback.

Runs the hot operations (minimum-set scans, the Roman 2-set scan, and
optimal-set enumeration) on seeded random connected graphs and prints a
per-operation timing table with speedups.

Usage: python benchmarks/bench_kernels.py [--sizes 12,14,16] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from rootdom import _pykernels
from rootdom.families import random_connected_graph

try:
    from rootdom import _ckernels
except ImportError:
    _ckernels = None


OPERATIONS = (
    ("gamma scan", lambda k, g: k.scan_min(k.KIND_DOMINATING, g.n, g.open_masks(), g.closed_masks(), None)),
    ("i scan", lambda k, g: k.scan_min(k.KIND_INDEPENDENT_DOMINATING, g.n, g.open_masks(), g.closed_masks(), None)),
    ("connected scan", lambda k, g: k.scan_min(k.KIND_CONNECTED_DOMINATING, g.n, g.open_masks(), g.closed_masks(), None)),
    ("convex scan", lambda k, g: k.scan_min(k.KIND_CONVEX_DOMINATING, g.n, g.open_masks(), g.closed_masks(), g.interval_masks())),
    ("super scan", lambda k, g: k.scan_min(k.KIND_SUPER_DOMINATING, g.n, g.open_masks(), g.closed_masks(), None)),
    ("alpha scan", lambda k, g: k.scan_max_independent(g.n, g.open_masks())),
    ("roman scan", lambda k, g: k.roman_min(g.n, g.closed_masks())),
)


def _time(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="12,14,16,18", help="comma-separated graph orders")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--p", type=float, default=0.25, help="edge probability")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    if _ckernels is None:
        print("compiled kernel unavailable; timing the pure-Python backend only")

    header = f"{'n':>3} {'operation':<15} {'python':>10}"
    if _ckernels is not None:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header)
    for n in sizes:
        graph = random_connected_graph(n, args.p, seed=args.seed + n)
        for name, op in OPERATIONS:
            py_time, py_result = _time(lambda: op(_pykernels, graph), args.repeat)
            line = f"{n:>3} {name:<15} {py_time * 1e3:>9.2f}ms"
            if _ckernels is not None:
                cy_time, cy_result = _time(lambda: op(_ckernels, graph), args.repeat)
                if cy_result != py_result:
                    raise SystemExit(f"backend mismatch on {name} at n={n}: {cy_result} vs {py_result}")
                line += f" {cy_time * 1e3:>9.2f}ms {py_time / cy_time:>7.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
