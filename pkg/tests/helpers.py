"""Random instance generators shared by the test modules."""

import random
from itertools import combinations

from hypothesis import strategies as st

from quadsyz.ideal import degree, minimalize, support
from quadsyz.simplicial import Graph, SimplicialComplex


def names(n, prefix="x"):
    return [f"{prefix}{i}" for i in range(n)]


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_adjacency(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_adjacency(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def random_ktree(rng: random.Random, n: int, k: int) -> Graph:
    """k-tree on n >= k+1 vertices, relabelled at random."""
    edges = set(combinations(range(k + 1), 2))
    cliques = [tuple(range(k + 1))]
    for v in range(k + 1, n):
        base = rng.sample(rng.choice(cliques), k)
        edges |= {(a, v) for a in base}
        cliques.append(tuple(sorted(base + [v])))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_adjacency(n, [(perm[a], perm[b]) for a, b in edges])


def random_quadratic_ideal(rng: random.Random, n: int, square_p=None, edge_p=None):
    """Random quadratic monomial ideal; never empty of generators."""
    square_p = rng.random() if square_p is None else square_p
    edge_p = rng.random() if edge_p is None else edge_p
    while True:
        gens = [[2 if k == i else 0 for k in range(n)] for i in range(n) if rng.random() < square_p]
        gens += [
            [1 if k in (i, j) else 0 for k in range(n)]
            for i, j in combinations(range(n), 2)
            if rng.random() < edge_p
        ]
        if gens:
            return minimalize(gens, names(n))


def random_monomial_ideal(rng: random.Random, n: int, max_degree: int, count: int):
    gens = []
    for _ in range(count):
        e = [0] * n
        for _ in range(rng.randint(1, max_degree)):
            e[rng.randrange(n)] += 1
        gens.append(e)
    return minimalize(gens, names(n))


def random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    facets = [tuple(sorted(rng.sample(range(n), rng.randint(1, n)))) for _ in range(rng.randint(1, 4))]
    facets += [(v,) for v in range(n)]
    return SimplicialComplex(names(n), tuple(facets))


def cycle_graph(n: int) -> Graph:
    return Graph.from_adjacency(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_adjacency(10, outer + spokes + inner)


def edges_of_ideal(ideal):
    """Edges of the 1-skeleton of Delta, read off the raw generators."""
    quad = {support(g) for g in ideal.gens if degree(g) == 2 and len(support(g)) == 2}
    return {e for e in combinations(range(ideal.nvars), 2) if e not in quad}


# hypothesis strategies


@st.composite
def quadratic_ideals(draw, max_vars=6):
    n = draw(st.integers(1, max_vars))
    pairs = list(combinations(range(n), 2))
    squares = draw(st.sets(st.integers(0, n - 1)))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    gens = [[2 if k == i else 0 for k in range(n)] for i in squares]
    gens += [[1 if k in e else 0 for k in range(n)] for e in edges]
    return minimalize(gens, names(n))


@st.composite
def monomial_lists(draw, max_vars=5, max_degree=3):
    n = draw(st.integers(1, max_vars))
    vec = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(any)
    return n, draw(st.lists(vec, max_size=7))


@st.composite
def graphs(draw, max_vertices=8):
    n = draw(st.integers(0, max_vertices))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_adjacency(n, edges)


# acceptance results, filled by test_acceptance and printed by conftest
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def acceptance_line(n, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
