"""Reduction routes of the two-color construction for subcubic graphs whose degree-3
vertices are independent, and the graphs that needed the search fallback.

usage: python3 scripts/sweep_independent.py [max_n]   (default 11)
"""

from __future__ import annotations

import sys
import time

from lirlab.families import enumerate_connected
from lirlab.mgraph import double
from lirlab.subcubic.independent import ReductionTrace, color_subcubic_independent
from lirlab.verify import verify, verify_pendant_invariant


def main(max_n: int) -> int:
    t = time.perf_counter()
    trace = ReductionTrace()
    count = bad = 0
    for n in range(3, max_n + 1):
        for g in enumerate_connected(n, 3, True):
            count += 1
            c = color_subcubic_independent(g, trace)
            gg = double(g)
            bad += not (verify(gg, c).ok and verify_pendant_invariant(gg, c))
    print(f"{count} graphs, {bad} failures, {time.perf_counter() - t:.1f}s")
    for route, k in sorted(trace.routes.items()):
        print(f"  {route:36s} {k}")
    distinct = sorted({str(x) for x in trace.fallbacks})
    print(f"search fallbacks: {len(trace.fallbacks)} calls on {len(distinct)} distinct subgraphs")
    for x in distinct:
        print(f"  {x}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 11))
