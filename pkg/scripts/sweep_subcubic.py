"""Three-color pipeline over connected subcubic graphs: decomposition kinds, color-4
shapes and which lift routes were taken.

usage: python3 scripts/sweep_subcubic.py [max_n]   (default 10)
"""

from __future__ import annotations

import sys
import time
from collections import Counter

from lirlab.families import enumerate_connected_subcubic
from lirlab.mgraph import double
from lirlab.oracle import is_colorable
from lirlab.subcubic.classify import classify_mono_components
from lirlab.subcubic.decomposition import find_phi, pertinent_decomposition
from lirlab.subcubic.lift import LiftTrace, lift_double_3
from lirlab.verify import verify


def main(max_n: int) -> int:
    t = time.perf_counter()
    kinds: Counter = Counter()
    shapes: Counter = Counter()
    trace = LiftTrace()
    palettes: Counter = Counter()
    skipped = failed = 0
    for n in range(3, max_n + 1):
        for g in enumerate_connected_subcubic(n):
            if not is_colorable(g):
                skipped += 1
                continue
            d = pertinent_decomposition(g)
            kinds.update(el.kind for el in d.elements if el.kind != "P3")
            ec = find_phi(g, d)
            shapes.update((col, s) for col, s, _ in classify_mono_components(ec.edge_colors(d)))
            c = lift_double_3(g, d, ec, trace)
            palettes[len(c.palette)] += 1
            failed += not verify(double(g), c).ok
    print(f"uncolorable skipped: {skipped}; failures: {failed}")
    print(f"special elements: {dict(kinds)}")
    print(f"(color, shape) counts: {dict(sorted(shapes.items()))}")
    print(f"lift routes: {dict(trace.routes)}")
    print(f"palette sizes: {dict(sorted(palettes.items()))}")
    print(f"{time.perf_counter() - t:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 10))
