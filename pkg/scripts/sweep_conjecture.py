"""Exact lir of ^2G for every connected simple graph G != K2 up to a vertex bound.

usage: python3 scripts/sweep_conjecture.py [max_n]   (default 7)
"""

from __future__ import annotations

import sys
import time
from collections import Counter

from lirlab.families import enumerate_connected
from lirlab.mgraph import double
from lirlab.oracle import exact_lir
from lirlab.verify import verify


def main(max_n: int) -> int:
    worst = 0
    for n in range(3, max_n + 1):
        t = time.perf_counter()
        dist: Counter = Counter()
        nodes = 0
        for g in enumerate_connected(n):
            r = exact_lir(double(g), k_max=3)
            assert verify(double(g), r.witness).ok
            dist[r.value] += 1
            nodes += r.nodes
            worst = max(worst, r.value)
        print(f"n={n}: {dict(sorted(dist.items()))}  nodes={nodes}  {time.perf_counter() - t:.1f}s", flush=True)
    print(f"largest value seen: {worst}")
    return 0 if worst <= 2 else 1


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 7))
