"""Command line front end: ``lirlab color|verify|lir|casecheck|gen|bench``."""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator

from .families import gen_family
from .io import FormatError, emit_coloring, emit_graph6, parse_coloring, parse_graph6, read_graph6_lines
from .mgraph import GraphError, Multigraph, double
from .oracle import BudgetExceeded, LirUnknown, exact_lir
from .pipeline import STRATEGIES, run
from .subcubic.casetable import FIGURE_OPTIONS, middle_part_casecheck
from .verify import verify


def _graphs(sources: list[str]) -> Iterator[tuple[str, Multigraph]]:
    """Graphs from files, ``-`` (stdin) or literal graph6 strings, with ids.

    Ids are ``<line>`` for a single source and ``<source>:<line>`` otherwise.
    """
    sources = sources or ["-"]
    for src in sources:
        if src == "-":
            lines = sys.stdin.read().splitlines()
        elif os.path.isfile(src):
            lines = Path(src).read_text().splitlines()
        else:
            lines = [src]
        for no, g in read_graph6_lines(lines):
            yield (str(no) if len(sources) == 1 else f"{src}:{no}"), g


def _open_out(path: str | None):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", newline="")


def _jobs(args) -> int:
    return 1 if args.deterministic else max(1, args.jobs)


def _run_one(item):
    # graphs travel as graph6 text so worker processes can receive them
    gid, g6, strategy, kmax = item
    return run(gid, parse_graph6(g6), strategy, kmax)


def _run_all(args, graphs):
    items = [(gid, emit_graph6(g), args.strategy, args.kmax) for gid, g in graphs]
    if _jobs(args) == 1 or len(items) < 2:
        yield from map(_run_one, items)
        return
    with ProcessPoolExecutor(max_workers=_jobs(args)) as ex:
        # map keeps input order
        yield from ex.map(_run_one, items, chunksize=4)


def _safe(gid: str) -> str:
    return gid.replace("/", "_").replace(":", "_")


def cmd_color(args) -> int:
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    graphs = list(_graphs(args.input))
    by_id = dict(graphs)
    failed = 0
    for rep, c in _run_all(args, graphs):
        if c is not None and outdir:
            (outdir / f"{_safe(rep.graph_id)}.col").write_text(emit_coloring(double(by_id[rep.graph_id]), c))
        failed += not rep.ok
        print(json.dumps(rep.as_dict()), flush=True)
    return 1 if failed else 0


def _read_first_graph(src: str) -> Multigraph:
    return next(_graphs([src]))[1]


def _verify_pair(g: Multigraph, text: str) -> tuple[bool, list[str]]:
    # a coloring of ^2G names copy 1 somewhere; otherwise check the simple graph
    body = [ln.split() for ln in text.splitlines()[1:] if ln.strip()]
    target = double(g) if any(len(p) == 4 and p[2] == "1" for p in body) else g
    c = parse_coloring(text, target)
    rep = verify(target, c)
    return rep.ok, [f"conflict {u} {v} color {k}" for u, v, k in rep.conflicts]


def cmd_verify(args) -> int:
    cpath = Path(args.coloring)
    if cpath.is_dir():
        bad = 0
        for gid, g in _graphs([args.graph]):
            f = cpath / f"{_safe(gid)}.col"
            if not f.exists():
                print(f"{gid}: missing {f}")
                bad += 1
                continue
            ok, lines = _verify_pair(g, f.read_text())
            print(f"{gid}: {'ok' if ok else 'conflicts'}")
            for ln in lines:
                print(f"  {ln}")
            bad += not ok
        return 1 if bad else 0
    ok, lines = _verify_pair(_read_first_graph(args.graph), cpath.read_text())
    print("ok" if ok else "conflicts")
    for ln in lines:
        print(ln)
    return 0 if ok else 1


def cmd_lir(args) -> int:
    failed = 0
    for gid, g in _graphs(args.input):
        target = double(g) if args.double else g
        try:
            print(exact_lir(target, k_max=args.kmax).value, flush=True)
        except (BudgetExceeded, LirUnknown) as e:
            print(f"error {gid}: {e}", flush=True)
            failed += 1
    return 1 if failed else 0


def cmd_casecheck(args) -> int:
    table = middle_part_casecheck(FIGURE_OPTIONS if args.figure_labels else None)
    total = len(table.rows)
    if args.out:
        Path(args.out).write_text(table.serialize())
    print(f"{table.extendable}/{total} extendable")
    return 0 if table.extendable == total else 1


def _family_args(raw: list[str]):
    out = []
    for a in raw:
        if "," in a:
            out.append([int(x) for x in a.split(",") if x])
        else:
            out.append(int(a))
    return out


def cmd_gen(args) -> int:
    fam = _family_args(args.params)
    with _open_out(args.out) as fh:
        for g in gen_family(args.kind, *fam, seed=args.seed):
            fh.write(emit_graph6(g) + "\n")
    return 0


def cmd_bench(args) -> int:
    failed = 0
    with _open_out(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["graph_id", "n", "m", "strategy", "palette", "nodes", "ms"])
        for rep, _ in _run_all(args, _graphs(args.input)):
            w.writerow([rep.graph_id, rep.n, rep.m, rep.strategy if rep.ok else f"error:{rep.strategy}",
                        rep.palette, rep.nodes, f"{rep.ms:.3f}"])
            fh.flush()
            failed += not rep.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lirlab", description="Locally irregular colorings of doubled graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, strategy=False):
        sp.add_argument("--budget-nodes", type=int, default=None,
                        help="search node budget (default: $LIRLAB_BUDGET or built-in)")
        sp.add_argument("--deterministic", action="store_true", help="single process, fixed tie-breaks")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--kmax", type=int, default=4, help="largest palette the oracle tries")
        if strategy:
            sp.add_argument("--strategy", default="auto", choices=("auto",) + STRATEGIES)
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("color", help="color ^2G for each input graph; reports as JSON lines")
    sp.add_argument("input", nargs="*", help="graph6 files, '-' or graph6 strings")
    common(sp, strategy=True)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring (or a directory of colorings)")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lir", help="exact locally irregular chromatic index")
    sp.add_argument("input", nargs="*")
    sp.add_argument("--double", action="store_true", help="compute for ^2G instead of G")
    common(sp)
    sp.set_defaults(func=cmd_lir)

    sp = sub.add_parser("casecheck", help="exhaustive check of the adjacent-degree-two reduction")
    sp.add_argument("--figure-labels", action="store_true", help="use the option labels as drawn")
    common(sp)
    sp.set_defaults(func=cmd_casecheck)

    sp = sub.add_parser("gen", help="emit a graph family as graph6")
    sp.add_argument("kind")
    sp.add_argument("params", nargs="*", help="integers; comma lists for sequences")
    common(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time the pipeline; CSV output")
    sp.add_argument("input", nargs="*")
    common(sp, strategy=True)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget_nodes is not None:
        # worker processes and nested searches read the budget from here
        os.environ["LIRLAB_BUDGET"] = str(args.budget_nodes)
    try:
        return args.func(args)
    except FormatError as e:
        print(f"lirlab: {e}", file=sys.stderr)
        return 2
    except (GraphError, OSError) as e:
        print(f"lirlab: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
