"""Linear syzygies of quadratic monomial ideals.

Decides the largest p for which N_{2,p} holds, combinatorially (holes in the
1-skeleton, links of square vertices) and checks the answer against graded
Betti tables computed by Hochster's formula and by Koszul homology.
"""

from .betti import (
    GradedBettiTable,
    betti_table_general,
    hochster_table,
    koszul_table,
    n2p_from_table,
    regularity,
)
from .engine import cross_check, failure_witness, is_two_regular, n2p_quadratic, n2p_squarefree
from .graphs import MinimalCycle, brute_force_shortest_hole, enumerate_holes, is_chordal, shortest_hole
from .homology import F2, F3, QQ, FieldSpec, matrix_rank, reduced_homology_dims
from .ideal import (
    MonomialIdeal,
    VariableSet,
    coordinate_section,
    ideal_from_strings,
    is_saturated_quadratic,
    minimalize,
    polarize,
    quadratic_decompose,
    saturate_oracle,
)
from .simplicial import Graph, SimplicialComplex, clique_complex, link, sr_complex, sr_ideal
from .text import format_ideal, parse_graph, parse_ideal
from .verdict import N2pIndex

__all__ = [
    "F2", "F3", "QQ", "FieldSpec", "GradedBettiTable", "Graph", "MinimalCycle",
    "MonomialIdeal", "N2pIndex", "SimplicialComplex", "VariableSet",
    "betti_table_general", "brute_force_shortest_hole", "clique_complex",
    "coordinate_section", "cross_check", "enumerate_holes", "failure_witness",
    "format_ideal", "hochster_table", "ideal_from_strings", "is_chordal",
    "is_saturated_quadratic", "is_two_regular", "koszul_table", "link",
    "matrix_rank", "minimalize", "n2p_from_table", "n2p_quadratic",
    "n2p_squarefree", "parse_graph", "parse_ideal", "polarize",
    "quadratic_decompose", "reduced_homology_dims", "regularity",
    "saturate_oracle", "shortest_hole", "sr_complex", "sr_ideal",
]
