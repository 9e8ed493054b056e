"""Exhaustive check of the adjacent-degree-two reduction.

Local picture (labels used in the serialized table)::

    x1 - x0 \\
             v0 - v1 - v2 - z
    y1 - y0 /

The multiedges x0x1, y0y1 and v2z are already colored; x0, y0 and v2 are leaves
of the reduced graph. Each boundary multiedge comes with the red and blue
degrees of its far endpoint (x1, y1, z), which in the reduced graph has degree
four or six and is in no conflict with the leaf. The four multiedges x0v0,
y0v0, v0v1 and v1v2 are to be colored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

# multiedge types by number of red copies
RR, RB, BB = 2, 1, 0
TYPE_NAMES = {RR: "RR", RB: "RB", BB: "BB"}
TYPES = (RR, RB, BB)

X1, X0, Y1, Y0, V0, V1, V2, Z = range(8)
REMOVED = ((X0, V0), (Y0, V0), (V0, V1), (V1, V2))
CHECKED = ((X1, X0), (X0, V0), (Y1, Y0), (Y0, V0), (V0, V1), (V1, V2), (V2, Z))


@dataclass(frozen=True, order=True)
class Boundary:
    """A colored boundary multiedge with its far endpoint's (red, blue) degrees."""

    kind: int
    red: int
    blue: int

    def code(self) -> str:
        return f"{TYPE_NAMES[self.kind]}({self.red},{self.blue})"


def boundary_options() -> list[Boundary]:
    """All admissible boundary configurations.

    The leaf end of a multiedge of type t has degrees (t, 2 - t). The far end has
    total degree 4 or 6, carries the multiedge's own copies, differs from the
    leaf in every color the multiedge uses, and for a red-blue multiedge is not
    (3, 3) by the pendant invariant.
    """
    out = []
    for kind in (RR, RB, BB):
        leaf = (kind, 2 - kind)
        for total in (4, 6):
            for r in range(total + 1):
                b = total - r
                if r < kind or b < 2 - kind:
                    continue
                if kind > 0 and r == leaf[0]:
                    continue
                if kind < 2 and b == leaf[1]:
                    continue
                if kind == RB and (r, b) == (3, 3):
                    continue
                out.append(Boundary(kind, r, b))
    return sorted(out, key=lambda o: (-o.kind, o.red + o.blue, -o.red))


def _extension_ok(bnd: tuple[Boundary, Boundary, Boundary], ext: tuple[int, ...]) -> bool:
    kinds = {(X1, X0): bnd[0].kind, (Y1, Y0): bnd[1].kind, (V2, Z): bnd[2].kind}
    kinds.update(zip(REMOVED, ext))
    red = [0] * 8
    tot = [0] * 8
    for (a, b), t in kinds.items():
        for x in (a, b):
            red[x] += t
            tot[x] += 2
    # far endpoints keep their given degrees
    for x, bd in zip((X1, Y1, Z), bnd):
        red[x], tot[x] = bd.red, bd.red + bd.blue
    for a, b in CHECKED:
        t = kinds[(a, b)]
        if t > 0 and red[a] == red[b]:
            return False
        if t < 2 and tot[a] - red[a] == tot[b] - red[b]:
            return False
    return True


# the option labels exactly as drawn in the reference figure; its blue-blue group
# lists (2, 2), which cannot occur next to a blue-blue leaf, instead of (1, 3)
FIGURE_OPTIONS = tuple(
    [Boundary(RR, r, b) for r, b in ((5, 1), (4, 2), (3, 3), (4, 0), (3, 1), (6, 0))]
    + [Boundary(RB, r, b) for r, b in ((4, 2), (2, 2), (2, 4))]
    + [Boundary(BB, r, b) for r, b in ((2, 4), (1, 5), (0, 6), (2, 2), (0, 4), (3, 3))]
)


@dataclass(frozen=True)
class CaseTable:
    options: tuple[Boundary, ...]
    rows: tuple[tuple[tuple[int, int, int], tuple[int, ...] | None], ...]

    @property
    def extendable(self) -> int:
        return sum(1 for _, ext in self.rows if ext is not None)

    def lookup(self, b0: Boundary, b1: Boundary, b2: Boundary) -> tuple[int, ...] | None:
        idx = {o: i for i, o in enumerate(self.options)}
        n = len(self.options)
        return self.rows[(idx[b0] * n + idx[b1]) * n + idx[b2]][1]

    def serialize(self) -> str:
        lines = []
        for (i, j, k), ext in self.rows:
            head = " ".join(self.options[t].code() for t in (i, j, k))
            if ext is None:
                lines.append(f"{head} : none")
                continue
            body = []
            for (a, b), t in zip(REMOVED, ext):
                cols = (1, 1) if t == RR else (1, 2) if t == RB else (2, 2)
                for copy, c in enumerate(cols):
                    body.append(f"{min(a, b)} {max(a, b)} {copy} {c}")
            lines.append(f"{head} : " + "; ".join(body))
        return "\n".join(lines) + "\n"


def middle_part_casecheck(options=None) -> CaseTable:
    """For every boundary triple, the first extension (in a fixed order) that is
    conflict-free, or ``None`` if there is none.

    ``options`` defaults to :func:`boundary_options`; pass :data:`FIGURE_OPTIONS`
    to run over the figure's labels instead.
    """
    opts = tuple(boundary_options() if options is None else options)
    rows = []
    for i, j, k in product(range(len(opts)), repeat=3):
        bnd = (opts[i], opts[j], opts[k])
        found = None
        for ext in product(TYPES, repeat=len(REMOVED)):
            if _extension_ok(bnd, ext):
                found = ext
                break
        rows.append(((i, j, k), found))
    return CaseTable(opts, tuple(rows))
