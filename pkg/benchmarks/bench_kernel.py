"""Benchmark the compiled state-enumeration kernel against the pure one.

Usage: python benchmarks/bench_kernel.py [repeats]
"""

import sys
import time

from matchnet._statecount_py import count_connecting as count_py
from matchnet.networks import graph_realization, hammock, pos, sop

try:
    from matchnet._statecount import count_connecting as count_c
except ImportError:
    count_c = None


CASES = [
    ("hammock(3,4), 2^12 states", hammock(3, 4)),
    ("hammock(4,4), 2^16 states", hammock(4, 4)),
    ("sop(4,5), 2^20 states", sop(4, 5)),
]


def bench(fn, g, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(g.node_count, g.edges, g.source, g.terminus)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'case':30s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for label, net in CASES:
        g = graph_realization(net)
        t_py, r_py = bench(count_py, g, repeats)
        if count_c is None:
            print(f"{label:30s} {t_py:9.3f}s {'n/a':>10s} {'n/a':>8s}")
            continue
        t_c, r_c = bench(count_c, g, repeats)
        assert list(r_c) == list(r_py), "kernels disagree"
        print(f"{label:30s} {t_py:9.3f}s {t_c:9.3f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
