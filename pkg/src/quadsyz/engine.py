"""Combinatorial N_{2,p} decisions, failure witnesses, and oracle cross-checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .betti import (
    DEFAULT_MAX_VARS,
    GradedBettiTable,
    betti_table_general,
    koszul_table,
    n2p_from_table,
)
from .errors import NotQuadratic
from .graphs import MinimalCycle, shortest_hole
from .homology import QQ, FieldSpec
from .ideal import (
    Monomial,
    MonomialIdeal,
    QuadraticDecomposition,
    degree,
    format_monomial,
    quadratic_decompose,
)
from .simplicial import SimplicialComplex, is_clique_complex, is_simplex, link, one_skeleton
from .verdict import N2pIndex

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hole:
    cycle: MinimalCycle
    names: tuple[str, ...]

    def to_json(self):
        return {"type": "hole", "length": self.cycle.length, "cycle": list(self.names)}


@dataclass(frozen=True)
class LinkNotSimplex:
    x: str
    y: str
    z: str

    def to_json(self):
        return {"type": "link_not_simplex", "x": self.x, "y": self.y, "z": self.z}


@dataclass(frozen=True)
class SquareVertexInLink:
    x: str
    y: str

    def to_json(self):
        return {"type": "square_vertex_in_link", "x": self.x, "y": self.y}


@dataclass(frozen=True)
class NonQuadraticGenerator:
    monomial: Monomial
    text: str

    def to_json(self):
        return {"type": "non_quadratic_generator", "monomial": self.text}


FailureWitness = Hole | LinkNotSimplex | SquareVertexInLink | NonQuadraticGenerator


def n2p_squarefree(delta: SimplicialComplex) -> N2pIndex:
    if not is_clique_complex(delta):
        return N2pIndex.not_quadratic()
    hole = shortest_hole(one_skeleton(delta))
    if hole is None:
        return N2pIndex.two_regular()
    return N2pIndex.finite(hole.length - 3)


def _square_violation(dec: QuadraticDecomposition):
    """First square vertex (in variable order) breaking the link condition."""
    delta = dec.delta
    names = delta.ground.names
    for x in sorted(dec.square_vertices):
        lk = link(delta, x)
        # links in a flag complex are flag: a simplex iff pairwise adjacent
        lk_vertices = [names.index(v) for v in lk.ground.names]
        if not is_simplex(lk):
            g = one_skeleton(delta)
            y, z = next((a, b) for a, b in combinations(lk_vertices, 2) if not g.has_edge(a, b))
            return LinkNotSimplex(names[x], names[y], names[z])
        squares = [v for v in lk_vertices if v in dec.square_vertices]
        if squares:
            return SquareVertexInLink(names[x], names[squares[0]])
    return None


def n2p_quadratic(ideal: MonomialIdeal) -> N2pIndex:
    try:
        dec = quadratic_decompose(ideal)
    except NotQuadratic:
        return N2pIndex.not_quadratic()
    s = n2p_squarefree(dec.delta)
    if not dec.square_vertices:
        return s
    if _square_violation(dec) is None and s >= N2pIndex.finite(2):
        return s
    return N2pIndex.finite(1)


def is_two_regular(ideal: MonomialIdeal) -> bool:
    return n2p_quadratic(ideal) == N2pIndex.two_regular()


def failure_witness(ideal: MonomialIdeal):
    """Certificate that N_{2,p+1} fails, p being the index; None when 2-regular.

    A square-vertex violation already fails N_{2,2}, so it wins over any
    hole, including a tie with a 4-cycle.
    """
    bad = [g for g in ideal.gens if degree(g) != 2]
    if bad:
        return NonQuadraticGenerator(bad[0], format_monomial(bad[0], ideal.vars.names))
    dec = quadratic_decompose(ideal)
    violation = _square_violation(dec)
    if violation is not None:
        return violation
    hole = shortest_hole(one_skeleton(dec.delta))
    if hole is None:
        return None
    return Hole(hole, tuple(ideal.vars[v] for v in hole.vertices))


@dataclass
class CrossCheckReport:
    ideal: MonomialIdeal
    combinatorial: N2pIndex
    oracle: dict[str, N2pIndex] = field(default_factory=dict)
    koszul: dict[str, N2pIndex] = field(default_factory=dict)
    tables: dict[str, GradedBettiTable] = field(default_factory=dict)
    witness: object = None

    @property
    def agree(self) -> bool:
        verdicts = list(self.oracle.values()) + list(self.koszul.values())
        return all(v == self.combinatorial for v in verdicts)

    def to_json(self) -> dict:
        return {
            "n2p": self.combinatorial.to_json(),
            "witness": None if self.witness is None else self.witness.to_json(),
            "oracle": {f: v.to_json() for f, v in self.oracle.items()},
            "koszul": {f: v.to_json() for f, v in self.koszul.items()},
            "agree": self.agree,
        }


def cross_check(
    ideal: MonomialIdeal,
    fields: list[FieldSpec] | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
    koszul: bool = True,
    workers: int = 1,
) -> CrossCheckReport:
    fields = fields or [QQ]
    report = CrossCheckReport(ideal, n2p_quadratic(ideal), witness=failure_witness(ideal))
    for f in fields:
        table = betti_table_general(ideal, f, max_vars, workers)
        report.tables[str(f)] = table
        report.oracle[str(f)] = n2p_from_table(table)
        if koszul:
            report.koszul[str(f)] = n2p_from_table(koszul_table(ideal, f))
    if not report.agree:
        log.error(
            "internal inconsistency on %s: combinatorial %s, hochster %s, koszul %s",
            ideal,
            report.combinatorial,
            {k: str(v) for k, v in report.oracle.items()},
            {k: str(v) for k, v in report.koszul.items()},
        )
    return report
