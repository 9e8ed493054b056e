"""Compare the split-graph decision table with exact search on all split graphs.

usage: python3 scripts/split_table.py [max_n]   (default 8)
"""

from __future__ import annotations

import sys
from collections import Counter

from lirlab.families import enumerate_connected
from lirlab.general import UNDECOMPOSABLE, split_lir_table, split_recognize
from lirlab.oracle import UNCOLORABLE, exact_lir


def main(max_n: int) -> int:
    agree: Counter = Counter()
    bad = []
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            p = split_recognize(g)
            if p is None:
                continue
            pred = split_lir_table(p, g)
            truth = exact_lir(g, k_max=g.num_copies()).value
            truth = UNDECOMPOSABLE if truth == UNCOLORABLE else truth
            if pred == truth:
                agree[truth] += 1
            else:
                bad.append((str(g), p.d, pred, truth))
    print(f"agreements by value: {dict(agree)}")
    for row in bad:
        print("mismatch", *row)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 8))
