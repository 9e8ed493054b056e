"""graph6 parsing/emission and the plain-text coloring file format.

Coloring files look like::

    lir-coloring v1 <n> <pairs> <palette>
    u v copy color
    ...

with body lines sorted by ``(u, v, copy)`` and ``u < v``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .mgraph import CopyRef, EdgeColoring, GraphError, Multigraph

HEADER = ">>graph6<<"
COLORING_MAGIC = "lir-coloring v1"


class FormatError(GraphError):
    def __init__(self, msg: str, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{msg} ({', '.join(where)})" if where else msg)
        self.offset = offset
        self.line = line


def _check_char(ch: str, pos: int) -> int:
    x = ord(ch) - 63
    if not 0 <= x <= 63:
        raise FormatError(f"invalid graph6 character {ch!r}", offset=pos)
    return x


def parse_graph6(text: str) -> Multigraph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise FormatError("empty graph6 string", offset=base)
    first = _check_char(s[0], base)
    if first < 63:
        n, pos = first, 1
    else:
        if len(s) < 4:
            raise FormatError("truncated size field", offset=base + len(s))
        if s[1] == "~":
            raise FormatError("graphs with more than 258047 vertices are not supported", offset=base + 1)
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _check_char(s[i], base + i)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(body)}", offset=base + pos + min(len(body), need))
    vals = [_check_char(ch, base + pos + i) for i, ch in enumerate(body)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (vals[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Multigraph.from_edges(n, edges)


def emit_graph6(g: Multigraph) -> str:
    """graph6 of the underlying simple graph (multiplicities are dropped)."""
    n = g.n
    if n < 63:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        raise GraphError("graph too large for graph6")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Multigraph]]:
    """Yield ``(line_number, graph)`` for every non-blank line."""
    for no, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield no, parse_graph6(line)
        except FormatError as e:
            raise FormatError(str(e), line=no) from None


def emit_coloring(g: Multigraph, c: Mapping[CopyRef, int]) -> str:
    if not EdgeColoring(c).is_total(g):
        raise GraphError("coloring is not total on the graph")
    palette = max(c.values(), default=0)
    lines = [f"{COLORING_MAGIC} {g.n} {g.m} {palette}"]
    for (u, v, k) in sorted(c):
        lines.append(f"{u} {v} {k} {c[(u, v, k)]}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Multigraph) -> EdgeColoring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty coloring file", line=1)
    head = lines[0].split(" ")
    if " ".join(head[:2]) != COLORING_MAGIC or len(head) != 5:
        raise FormatError("bad header", line=1)
    try:
        n, pairs, palette = (int(x) for x in head[2:])
    except ValueError:
        raise FormatError("non-integer header field", line=1) from None
    if n != g.n or pairs != g.m:
        raise FormatError(f"header says n={n}, pairs={pairs}; graph has n={g.n}, pairs={g.m}", line=1)
    out: dict[CopyRef, int] = {}
    for no, line in enumerate(lines[1:], 2):
        parts = line.split(" ")
        if len(parts) != 4:
            raise FormatError("expected 'u v copy color'", line=no)
        try:
            u, v, k, col = (int(x) for x in parts)
        except ValueError:
            raise FormatError("non-integer field", line=no) from None
        if not u < v:
            raise FormatError("endpoints must satisfy u < v", line=no)
        if not g.has_edge(u, v):
            raise FormatError(f"pair {u} {v} is not an edge", line=no)
        if not 0 <= k < g.mu(u, v):
            raise FormatError(f"copy {k} does not exist on pair {u} {v}", line=no)
        if col < 1:
            raise FormatError("colors must be positive", line=no)
        if (u, v, k) in out:
            raise FormatError(f"duplicate entry for {u} {v} {k}", line=no)
        out[(u, v, k)] = col
    c = EdgeColoring(out)
    if not c.is_total(g):
        raise FormatError("coloring does not cover every edge copy", line=len(lines))
    if c.palette_size != palette:
        raise FormatError(f"header palette {palette} differs from body maximum {c.palette_size}", line=1)
    return c
