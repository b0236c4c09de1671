"""Command-line front end.

Exit codes: 0 analysis done (whatever the verdict), 1 oracles disagree,
2 malformed input, 3 unsupported input, 4 size cap refused.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .betti import DEFAULT_MAX_VARS, betti_table_general, hochster_table, koszul_table, n2p_from_table
from .engine import cross_check, failure_witness, n2p_quadratic
from .errors import ParseError, QuadsyzError
from .graphs import enumerate_holes, is_chordal, lex_bfs, shortest_hole
from .homology import QQ, FieldSpec
from .ideal import coordinate_section, is_saturated_quadratic, minimalize, polarize, saturate_oracle
from .text import format_ideal, parse_graph, parse_ideal

log = logging.getLogger("quadsyz")


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    if ":" in source:
        return source
    raise ParseError(f"no such file: {source}")


def cycle_ideal(n: int):
    """Stanley-Reisner ideal of the n-cycle on v0..v{n-1}."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    gens = []
    for i in range(n):
        for j in range(i + 2, n):
            if (i, j) != (0, n - 1):
                gens.append([1 if k in (i, j) else 0 for k in range(n)])
    return minimalize(gens, [f"v{i}" for i in range(n)])


def _witness_json(w):
    return None if w is None else w.to_json()


def _cmd_n2p(args):
    ideal = parse_ideal(_read(args.ideal))
    verdict = n2p_quadratic(ideal)
    w = failure_witness(ideal)
    return {"n2p": verdict.to_json(), "witness": _witness_json(w)}, [
        f"ideal:   {ideal}",
        f"N2p:     {verdict}",
        f"witness: {w}",
    ]


def _cmd_betti(args):
    ideal = parse_ideal(_read(args.ideal))
    f = FieldSpec.parse(args.field)
    tables = {}
    if args.oracle in ("hochster", "both"):
        tables["hochster"] = betti_table_general(ideal, f, args.max_vars, args.threads)
    if args.oracle in ("koszul", "both"):
        tables["koszul"] = koszul_table(ideal, f)
    main = next(iter(tables.values()))
    doc = {"field": str(f), "n2p": n2p_from_table(main).to_json(), "betti": main.rows()}
    lines = [f"ideal: {ideal}   field: {f}"]
    for name, t in tables.items():
        lines += [f"{name}:", t.render()]
    if len(tables) == 2:
        doc["agree"] = tables["hochster"] == tables["koszul"]
        lines.append(f"agree: {doc['agree']}")
    return doc, lines


def _cmd_holes(args):
    g = parse_graph(_read(args.graph))
    max_len = args.max_len if args.max_len is not None else max(len(g), 4)
    holes = enumerate_holes(g, max_len)
    doc = {
        "chordal": not holes and is_chordal(g),
        "holes": [{"length": h.length, "cycle": h.names(g)} for h in holes],
    }
    lines = [f"{len(holes)} hole(s) of length <= {max_len}"]
    lines += [f"  {h.length}: {' '.join(h.names(g))}" for h in holes]
    return doc, lines


def _cmd_chordal(args):
    g = parse_graph(_read(args.graph))
    chordal = is_chordal(g)
    hole = None if chordal else shortest_hole(g)
    doc = {
        "chordal": chordal,
        "lex_bfs": [g.vertices[v] for v in lex_bfs(g)],
        "hole": None if hole is None else hole.names(g),
    }
    lines = [f"chordal: {chordal}"]
    if hole is not None:
        lines.append(f"shortest hole: {' '.join(hole.names(g))}")
    return doc, lines


def _cmd_polarize(args):
    ideal = parse_ideal(_read(args.ideal))
    polar, origin = polarize(ideal)
    text = format_ideal(polar)
    return {"ideal": text, "map": origin}, [text.rstrip()]


def _cmd_saturated(args):
    ideal = parse_ideal(_read(args.ideal))
    by_rule = is_saturated_quadratic(ideal)
    sat = saturate_oracle(ideal)
    oracle = sat == ideal
    doc = {
        "saturated": by_rule,
        "saturation": "(1)" if sat.is_unit else str(sat),
        "agree": by_rule == oracle,
    }
    return doc, [f"saturated: {by_rule}", f"saturation: {doc['saturation']}", f"agree: {doc['agree']}"]


def _cmd_section(args):
    ideal = parse_ideal(_read(args.ideal))
    section = coordinate_section(ideal, [v.strip() for v in args.keep.split(",") if v.strip()])
    verdict = n2p_quadratic(section)
    doc = {
        "ideal": format_ideal(section),
        "n2p": verdict.to_json(),
        "witness": _witness_json(failure_witness(section)),
    }
    return doc, [format_ideal(section).rstrip(), f"N2p: {verdict}"]


def _cmd_verify(args):
    ideal = parse_ideal(_read(args.ideal))
    fields = [FieldSpec.parse(f) for f in args.fields.split(",") if f.strip()]
    report = cross_check(ideal, fields, args.max_vars, workers=args.threads)
    doc = report.to_json()
    doc["betti"] = next(iter(report.tables.values())).rows()
    lines = [f"ideal: {ideal}", f"combinatorial: {report.combinatorial}"]
    for f in report.oracle:
        k = report.koszul.get(f)
        lines.append(f"  {f}: hochster {report.oracle[f]}" + (f", koszul {k}" if k else ""))
    lines += [f"witness: {report.witness}", f"agree: {report.agree}"]
    return doc, lines


def _cmd_demo(args):
    ideal = cycle_ideal(args.n)
    verdict = n2p_quadratic(ideal)
    table = hochster_table(ideal, QQ, DEFAULT_MAX_VARS, args.threads)
    oracle = n2p_from_table(table)
    doc = {
        "ideal": format_ideal(ideal),
        "n2p": verdict.to_json(),
        "witness": _witness_json(failure_witness(ideal)),
        "betti": table.rows(),
        "agree": verdict == oracle,
    }
    lines = [f"{args.n}-cycle: {ideal}", f"N2p: {verdict} (oracle {oracle})", table.render()]
    return doc, lines


def _echo(argv):
    """argv without --threads, which must not change the JSON output."""
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--threads":
            skip = True
        elif not a.startswith("--threads="):
            out.append(a)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes")

    parser = argparse.ArgumentParser(prog="quadsyz", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *arg_names, help):
        p = sub.add_parser(name, parents=[common], help=help)
        for a in arg_names:
            p.add_argument(a, help="file path, '-' for stdin, or inline text")
        p.set_defaults(func=func)
        return p

    add("n2p", _cmd_n2p, "ideal", help="combinatorial N_{2,p} index")
    p = add("betti", _cmd_betti, "ideal", help="graded Betti table")
    p.add_argument("--field", default="q")
    p.add_argument("--oracle", choices=["hochster", "koszul", "both"], default="hochster")
    p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    p = add("holes", _cmd_holes, "graph", help="chordless cycles")
    p.add_argument("--max-len", type=int)
    add("chordal", _cmd_chordal, "graph", help="chordality test")
    add("polarize", _cmd_polarize, "ideal", help="squarefree polarization")
    add("saturated", _cmd_saturated, "ideal", help="saturation check")
    p = add("section", _cmd_section, "ideal", help="coordinate section")
    p.add_argument("--keep", required=True)
    p = add("verify", _cmd_verify, "ideal", help="cross-check against the Betti oracles")
    p.add_argument("--fields", default="q,f2,f3")
    p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    demo = sub.add_parser("demo", parents=[common], help="built-in examples")
    demo_sub = demo.add_subparsers(dest="demo", required=True)
    p = demo_sub.add_parser("cycle", parents=[common], help="the n-cycle ideal")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_demo)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.threads = max(1, getattr(args, "threads", 1))
    start = time.perf_counter()
    try:
        doc, lines = args.func(args)
    except QuadsyzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    doc = {"command": _echo(argv), **doc}
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(lines))
        print(f"({time.perf_counter() - start:.3f}s)", file=sys.stderr)
    if doc.get("agree") is False:
        log.error("internal consistency failure: oracles disagree on %s", argv)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
