import random

import pytest
from hypothesis import given, settings

from helpers import cycle_graph, edges_of_ideal, names, quadratic_ideals, random_graph, random_quadratic_ideal
from quadsyz.betti import betti_table_general, n2p_from_table
from quadsyz.cli import cycle_ideal
from quadsyz.engine import (
    Hole,
    LinkNotSimplex,
    NonQuadraticGenerator,
    SquareVertexInLink,
    cross_check,
    failure_witness,
    is_two_regular,
    n2p_quadratic,
    n2p_squarefree,
)
from quadsyz.homology import F2, F3, QQ
from quadsyz.ideal import coordinate_section, ideal_from_strings, minimalize
from quadsyz.simplicial import Graph, SimplicialComplex, clique_complex, sr_ideal
from quadsyz.verdict import N2pIndex

Finite = N2pIndex.finite
TWO_REG = N2pIndex.two_regular()


def test_verdict_order():
    assert N2pIndex.not_quadratic() < Finite(1) < Finite(5) < TWO_REG
    assert Finite(3).holds(3) and not Finite(3).holds(4)
    assert TWO_REG.holds(100)
    assert str(Finite(4)) == "Finite(4)"


@pytest.mark.parametrize("n", range(4, 10))
def test_cycle_family(n):
    assert n2p_quadratic(cycle_ideal(n)) == Finite(n - 3)


def test_squarefree_examples():
    assert n2p_squarefree(clique_complex(cycle_graph(4))) == Finite(1)
    assert n2p_squarefree(SimplicialComplex.simplex("xyz")) == TWO_REG
    hollow = SimplicialComplex.from_names("xyz", [("x", "y"), ("y", "z"), ("x", "z")])
    assert n2p_squarefree(hollow) == N2pIndex.not_quadratic()
    fan = Graph.from_adjacency(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4)])
    assert n2p_squarefree(clique_complex(fan)) == TWO_REG


def test_quadratic_examples():
    assert n2p_quadratic(ideal_from_strings("xyz", "x^2", "y*z")) == Finite(1)
    assert n2p_quadratic(ideal_from_strings("xy", "x^2", "y^2")) == Finite(1)
    assert n2p_quadratic(ideal_from_strings("xy", "x^2", "x*y")) == TWO_REG
    assert n2p_quadratic(ideal_from_strings("xy", "x^2", "x*y", "y^2")) == TWO_REG
    assert n2p_quadratic(ideal_from_strings("xyz", "x*y*z")) == N2pIndex.not_quadratic()
    assert n2p_quadratic(minimalize([], "xy")) == TWO_REG
    assert is_two_regular(ideal_from_strings("x", "x^2"))
    assert not is_two_regular(cycle_ideal(6))


def test_square_on_long_cycle_caps_at_one():
    # a square attached to a 6-cycle: the hole alone would give 3
    c6 = cycle_ideal(6)
    gens = [list(g) for g in c6.gens] + [[2, 0, 0, 0, 0, 0]]
    assert n2p_quadratic(minimalize(gens, c6.vars)) == Finite(1)


def test_square_with_simplex_link_keeps_hole_index():
    # x^2 with x adjacent only to v0; the 6-cycle on v0..v5 remains
    c6 = cycle_ideal(6)
    vars_ = list(c6.vars) + ["x"]
    gens = [list(g) + [0] for g in c6.gens]
    gens += [[0] * 6 + [2]] + [[1 if k in (i, 6) else 0 for k in range(7)] for i in range(1, 6)]
    ideal = minimalize(gens, vars_)
    assert n2p_quadratic(ideal) == Finite(3)
    assert n2p_from_table(betti_table_general(ideal)) == Finite(3)


def test_witness_examples():
    hole = failure_witness(cycle_ideal(5))
    assert isinstance(hole, Hole) and hole.names == ("v0", "v1", "v2", "v3", "v4")
    assert hole.to_json() == {"type": "hole", "length": 5, "cycle": ["v0", "v1", "v2", "v3", "v4"]}
    assert failure_witness(ideal_from_strings("xyz", "x^2", "y*z")) == LinkNotSimplex("x", "y", "z")
    assert failure_witness(ideal_from_strings("xy", "x^2", "y^2")) == SquareVertexInLink("x", "y")
    w = failure_witness(ideal_from_strings("xyz", "x*y*z", "x^2"))
    assert isinstance(w, NonQuadraticGenerator) and w.text == "x*y*z"
    assert failure_witness(ideal_from_strings("xy", "x^2", "x*y")) is None


def check_witness(ideal, w, verdict):
    """Validate a witness using only the generators."""
    idx = {n: i for i, n in enumerate(ideal.vars)}
    edges = edges_of_ideal(ideal)
    square = {i for i in range(ideal.nvars) if any(g[i] == 2 for g in ideal.gens)}

    def adjacent(a, b):
        return tuple(sorted((idx[a], idx[b]))) in edges

    if w is None:
        assert verdict == TWO_REG
    elif isinstance(w, Hole):
        cyc = w.names
        assert verdict == Finite(len(cyc) - 3)
        for i, a in enumerate(cyc):
            for j, b in enumerate(cyc[i + 1:], i + 1):
                assert adjacent(a, b) == (j - i in (1, len(cyc) - 1))
    elif isinstance(w, LinkNotSimplex):
        assert verdict == Finite(1)
        assert idx[w.x] in square
        assert adjacent(w.x, w.y) and adjacent(w.x, w.z) and not adjacent(w.y, w.z)
    elif isinstance(w, SquareVertexInLink):
        assert verdict == Finite(1)
        assert {idx[w.x], idx[w.y]} <= square and adjacent(w.x, w.y)
    else:
        assert verdict == N2pIndex.not_quadratic()


@given(quadratic_ideals(max_vars=7))
def test_witness_sound(ideal):
    check_witness(ideal, failure_witness(ideal), n2p_quadratic(ideal))


def test_hole_section_is_cycle_ideal():
    rng = random.Random(31)
    seen = 0
    for _ in range(100):
        ideal = random_quadratic_ideal(rng, rng.randint(4, 8), square_p=0.0)
        w = failure_witness(ideal)
        if not isinstance(w, Hole):
            continue
        seen += 1
        section = coordinate_section(ideal, w.names)
        assert len(section.gens) == len(w.names) * (len(w.names) - 3) // 2
        assert n2p_quadratic(section) == Finite(len(w.names) - 3)
    assert seen > 10


@settings(max_examples=40, deadline=None)
@given(quadratic_ideals(max_vars=6))
def test_combinatorial_matches_oracle(ideal):
    assert n2p_quadratic(ideal) == n2p_from_table(betti_table_general(ideal))


def test_flag_graphs_match_oracle():
    rng = random.Random(32)
    for _ in range(80):
        ideal = sr_ideal(clique_complex(random_graph(rng, rng.randint(1, 8))))
        assert n2p_quadratic(ideal) == n2p_from_table(betti_table_general(ideal, F2))


def test_cross_check_examples():
    for text in (("xyz", "x^2", "y*z"), ("xy", "x^2", "y^2")):
        report = cross_check(ideal_from_strings(*text), [QQ, F2, F3])
        assert report.agree
        assert report.combinatorial == Finite(1)
        assert set(report.oracle.values()) == {Finite(1)}
        assert set(report.koszul.values()) == {Finite(1)}
    rep = cross_check(cycle_ideal(6), koszul=False)
    assert rep.koszul == {} and rep.to_json()["n2p"] == Finite(3).to_json()
    assert rep.to_json()["witness"]["length"] == 6


def test_agree_reflects_any_mismatch():
    report = cross_check(cycle_ideal(5), koszul=False)
    report.oracle["q"] = TWO_REG
    assert not report.agree
