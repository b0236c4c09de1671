"""Text formats for ideals and graphs.

Ideal files::

    vars: x y z        # comment
    gens: x^2, y*z

Graph files::

    vertices: a b c d
    edges: a-b, b-c, c-d, d-a

Names match ``[A-Za-z_][A-Za-z0-9_]*`` with an optional ``#<digits>`` suffix,
so polarized names like ``x#2`` survive a round trip; any other ``#`` starts
a comment. A ``;`` separates lines, which keeps inline text on one line.
A keyword line may continue onto following lines that carry no keyword.
"""

from __future__ import annotations

import re

from .errors import DuplicateEdge, GeneratorIsUnit, ParseError, SelfLoop, UnknownVariable
from .ideal import MonomialIdeal, VariableSet, minimalize
from .simplicial import Graph

NAME = r"[A-Za-z_][A-Za-z0-9_]*(?:#[0-9]+)?"
_TOKEN = re.compile(rf"(?P<name>{NAME})|(?P<int>[0-9]+)|(?P<ws>[ \t\r]+)|(?P<comment>#.*)|(?P<sym>.)")


def _tokens(line: str, lineno: int):
    for m in _TOKEN.finditer(line):
        kind = m.lastgroup
        if kind in ("ws", "comment"):
            continue
        yield kind, m.group(), lineno, m.start() + 1


def _sections(text: str, keywords: tuple[str, ...]) -> dict[str, list]:
    """Split text into keyword sections of tokens, keeping positions."""
    sections: dict[str, list] = {}
    current = None
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        col = 0
        for piece in raw.split(";"):
            lines.append((lineno, col, piece))
            col += len(piece) + 1
    for lineno, offset, line in lines:
        toks = [(k, v, ln, c + offset) for k, v, ln, c in _tokens(line, lineno)]
        if not toks:
            continue
        if (
            len(toks) >= 2
            and toks[0][0] == "name"
            and toks[0][1] in keywords
            and toks[1][1] == ":"
        ):
            current = toks[0][1]
            if current in sections:
                raise ParseError(f"duplicate '{current}:' line", lineno, toks[0][3])
            sections[current] = []
            toks = toks[2:]
        elif current is None:
            raise ParseError(f"expected one of {', '.join(k + ':' for k in keywords)}", lineno, toks[0][3])
        sections[current].extend(toks)
    return sections


def _split_commas(toks, lineno_hint=1):
    items, cur = [], []
    for t in toks:
        if t[1] == ",":
            if not cur:
                raise ParseError("empty item before ','", t[2], t[3])
            items.append(cur)
            cur = []
        else:
            cur.append(t)
    if cur:
        items.append(cur)
    elif items:
        raise ParseError("trailing ','", toks[-1][2], toks[-1][3])
    return items


def _names(toks, what):
    out = []
    for kind, value, ln, col in toks:
        if kind != "name":
            raise ParseError(f"expected a {what} name, got {value!r}", ln, col)
        if value in out:
            raise ParseError(f"duplicate {what} {value!r}", ln, col)
        out.append(value)
    return out


def parse_ideal(text: str) -> MonomialIdeal:
    sections = _sections(text, ("vars", "gens"))
    if "vars" not in sections:
        raise ParseError("missing 'vars:' line", 1, 1)
    if "gens" not in sections:
        raise ParseError("missing 'gens:' line", 1, 1)
    vs = VariableSet(tuple(_names(sections["vars"], "variable")))
    if not len(vs):
        raise ParseError("'vars:' lists no variables", 1, 1)
    gens = []
    for item in _split_commas(sections["gens"]):
        e = [0] * len(vs)
        k = 0
        while k < len(item):
            kind, value, ln, col = item[k]
            if kind == "int" and value == "1" and len(item) == 1:
                raise GeneratorIsUnit(f"line {ln}, column {col}: generator equals 1")
            if kind != "name":
                raise ParseError(f"expected a variable, got {value!r}", ln, col)
            if value not in vs.names:
                raise UnknownVariable(f"unknown variable {value!r}", ln, col)
            power = 1
            k += 1
            if k < len(item) and item[k][1] == "^":
                if k + 1 >= len(item) or item[k + 1][0] != "int":
                    raise ParseError("expected an exponent after '^'", item[k][2], item[k][3])
                power = int(item[k + 1][1])
                k += 2
            e[vs.index(value)] += power
            if k < len(item):
                if item[k][1] != "*":
                    raise ParseError(f"expected '*' or ',', got {item[k][1]!r}", item[k][2], item[k][3])
                k += 1
                if k == len(item):
                    raise ParseError("dangling '*'", item[k - 1][2], item[k - 1][3])
        gens.append(e)
    return minimalize(gens, vs)


def format_ideal(ideal: MonomialIdeal) -> str:
    return f"vars: {' '.join(ideal.vars)}\ngens: {', '.join(ideal.format_gens())}\n"


def parse_graph(text: str) -> Graph:
    sections = _sections(text, ("vertices", "edges"))
    if "vertices" not in sections:
        raise ParseError("missing 'vertices:' line", 1, 1)
    vs = VariableSet(tuple(_names(sections["vertices"], "vertex")))
    edges = set()
    for item in _split_commas(sections.get("edges", [])):
        if len(item) != 3 or item[1][1] != "-" or item[0][0] != "name" or item[2][0] != "name":
            raise ParseError("expected an edge 'a-b'", item[0][2], item[0][3])
        (_, a, ln, col), _, (_, b, _, _) = item
        for v in (a, b):
            if v not in vs.names:
                raise UnknownVariable(f"unknown vertex {v!r}", ln, col)
        if a == b:
            raise SelfLoop(f"self loop {a}-{a}", ln, col)
        key = tuple(sorted((vs.index(a), vs.index(b))))
        if key in edges:
            raise DuplicateEdge(f"duplicate edge {a}-{b}", ln, col)
        edges.add(key)
    return Graph(vs, frozenset(edges))


def format_graph(g: Graph) -> str:
    edges = ", ".join(f"{g.vertices[a]}-{g.vertices[b]}" for a, b in sorted(g.edges))
    return f"vertices: {' '.join(g.vertices)}\nedges: {edges}\n"
