"""Replace each edge of each small cubic graph by paths of length 5..12 and count branches.

usage: python3 scripts/path_expansion.py [max_n]   (default 8)
"""

from __future__ import annotations

import sys
from collections import Counter

from lirlab.families import cubic_graphs
from lirlab.mgraph import BLUE, RED, double
from lirlab.oracle import find_lir_coloring
from lirlab.subcubic.paths import expand_edge_to_path
from lirlab.verify import verify


def main(max_n: int) -> int:
    stats: Counter = Counter()
    per_len: Counter = Counter()
    bad = 0
    for n in range(4, max_n + 1, 2):
        for g in cubic_graphs(n):
            gg = double(g)
            base = find_lir_coloring(gg, 2)
            for c in (base, base.relabeled({RED: BLUE, BLUE: RED})):
                for uv in g.pairs:
                    for ell in range(5, 13):
                        g2, c2 = expand_edge_to_path(gg, c, uv, ell, stats)
                        bad += not verify(g2, c2).ok
                        per_len[ell] += 1
    print(f"branches: {dict(sorted(stats.items()))}")
    print(f"expansions per length: {dict(sorted(per_len.items()))}")
    print(f"failures: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 8))
