"""Simplicial complexes in facet form, graphs, and the Stanley-Reisner maps."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ContainsLinearForm, NotSquarefree, VertexNotInComplex, VoidComplex
from .ideal import MonomialIdeal, VariableSet, intersect, support

Face = tuple[int, ...]


def _maximal(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []
    for s in sorted(set(sets), key=len, reverse=True):
        if not any(s <= t for t in out):
            out.append(s)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``ground`` given by its facets (sorted index tuples).

    The irrelevant complex has the single facet ``()``; the void complex,
    with no faces at all, is rejected. Every ground vertex must be a face.
    """

    ground: VariableSet
    facets: tuple[Face, ...]

    def __post_init__(self):
        if not isinstance(self.ground, VariableSet):
            object.__setattr__(self, "ground", VariableSet(tuple(self.ground)))
        if not self.facets:
            raise VoidComplex("the void complex is not representable")
        maximal = _maximal(frozenset(f) for f in self.facets)
        facets = tuple(sorted(tuple(sorted(f)) for f in maximal))
        object.__setattr__(self, "facets", facets)
        covered = set().union(*facets)
        if covered != set(range(len(self.ground))):
            missing = sorted(set(range(len(self.ground))) - covered)
            raise ValueError(f"ground vertices {[self.ground[i] for i in missing]} are not faces")

    @classmethod
    def from_names(cls, ground: Sequence[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
        vs = VariableSet(tuple(ground))
        return cls(vs, tuple(tuple(vs.index(v) for v in f) for f in facets))

    @classmethod
    def simplex(cls, ground: Sequence[str]) -> SimplicialComplex:
        return cls(VariableSet(tuple(ground)), (tuple(range(len(ground))),))

    @classmethod
    def irrelevant(cls) -> SimplicialComplex:
        return cls(VariableSet(()), ((),))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @cached_property
    def _facet_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.facets)

    def is_face(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self._facet_sets)

    @cached_property
    def all_faces(self) -> frozenset[Face]:
        faces = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return frozenset(faces)

    def faces_of_dim(self, k: int) -> list[Face]:
        return sorted(f for f in self.all_faces if len(f) == k + 1)

    def f_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.all_faces:
            out[len(f) - 1] = out.get(len(f) - 1, 0) + 1
        return out

    def vertex(self, v: str | int) -> int:
        if isinstance(v, int):
            if not 0 <= v < len(self.ground):
                raise VertexNotInComplex(f"no vertex with index {v}")
            return v
        if v not in self.ground.names:
            raise VertexNotInComplex(f"{v!r} is not a vertex")
        return self.ground.index(v)

    def names_of(self, face: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in face)

    def facet_names(self) -> list[tuple[str, ...]]:
        return [self.names_of(f) for f in self.facets]


def _on_vertices(ground: VariableSet, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Re-index ``facets`` (indices into ``ground``) onto the vertices they use."""
    facets = [tuple(sorted(f)) for f in facets]
    used = sorted(set().union(*map(set, facets)))
    pos = {v: k for k, v in enumerate(used)}
    return SimplicialComplex(ground.restrict(used), tuple(tuple(pos[v] for v in f) for f in facets))


def is_simplex(delta: SimplicialComplex) -> bool:
    # the irrelevant complex counts: it is the simplex on no vertices
    return len(delta.facets) == 1


def full_subcomplex(delta: SimplicialComplex, w: Iterable[str | int]) -> SimplicialComplex:
    keep = sorted({delta.vertex(v) for v in w})
    if not keep:
        return SimplicialComplex.irrelevant()
    ks = set(keep)
    pos = {v: k for k, v in enumerate(keep)}
    facets = {tuple(pos[v] for v in f if v in ks) for f in delta.facets}
    return SimplicialComplex(delta.ground.restrict(keep), tuple(facets))


def link(delta: SimplicialComplex, v: str | int) -> SimplicialComplex:
    x = delta.vertex(v)
    return _on_vertices(delta.ground, ([u for u in f if u != x] for f in delta.facets if x in f))


def star(delta: SimplicialComplex, v: str | int) -> SimplicialComplex:
    x = delta.vertex(v)
    return _on_vertices(delta.ground, (f for f in delta.facets if x in f))


def cone(delta: SimplicialComplex, apex: str = "apex") -> SimplicialComplex:
    n = len(delta.ground)
    ground = VariableSet(delta.ground.names + (apex,))
    return SimplicialComplex(ground, tuple(f + (n,) for f in delta.facets))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are index pairs ``(i, j)`` with ``i < j``."""

    vertices: VariableSet
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.vertices, VariableSet):
            object.__setattr__(self, "vertices", VariableSet(tuple(self.vertices)))
        n = len(self.vertices)
        edges = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self loop at {self.vertices[a]}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            edges.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
        vs = VariableSet(tuple(vertices))
        return cls(vs, frozenset((vs.index(a), vs.index(b)) for a, b in edges))

    @classmethod
    def from_adjacency(cls, n: int, edges: Iterable[tuple[int, int]], prefix: str = "v") -> Graph:
        return cls(VariableSet(tuple(f"{prefix}{i}" for i in range(n))), frozenset(edges))

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(len(self.vertices))]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = sorted(set(keep))
        pos = {v: k for k, v in enumerate(keep)}
        edges = frozenset((pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos)
        return Graph(self.vertices.restrict(keep), edges)


def one_skeleton(delta: SimplicialComplex) -> Graph:
    edges = set()
    for f in delta.facets:
        edges.update(combinations(f, 2))
    return Graph(delta.ground, frozenset(edges))


def maximal_cliques(g: Graph) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with pivoting."""
    adj = g.adj

    def expand(r, p, x):
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    yield from expand(set(), set(range(len(g))), set())


def clique_complex(g: Graph) -> SimplicialComplex:
    if len(g) == 0:
        return SimplicialComplex.irrelevant()
    return SimplicialComplex(g.vertices, tuple(tuple(sorted(c)) for c in maximal_cliques(g)))


def minimal_nonfaces(delta: SimplicialComplex) -> list[Face]:
    return [support(m) for m in sr_ideal(delta).gens]


def is_clique_complex(delta: SimplicialComplex) -> bool:
    return all(len(f) == 2 for f in minimal_nonfaces(delta))


def sr_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Ideal of minimal non-faces, as the intersection of the facet primes."""
    n = len(delta.ground)
    result = None
    for f in delta.facets:
        fs = set(f)
        prime = MonomialIdeal(
            delta.ground,
            tuple(tuple(1 if k == i else 0 for k in range(n)) for i in range(n) if i not in fs),
        )
        result = prime if result is None else intersect(result, prime)
    return result


def _minimal_transversals(edges: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    covers = [frozenset()]
    for e in edges:
        grown = set()
        for c in covers:
            if c & e:
                grown.add(c)
            else:
                grown.update(c | {v} for v in e)
        covers = [c for c in grown if not any(d < c for d in grown)]
    return covers


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if not ideal.is_squarefree:
        raise NotSquarefree(f"{ideal} is not squarefree")
    supports = [frozenset(support(g)) for g in ideal.gens]
    if any(len(s) == 1 for s in supports):
        raise ContainsLinearForm(str(ideal.vars[next(iter(s))]) for s in supports if len(s) == 1)
    n = ideal.nvars
    if n == 0:
        return SimplicialComplex.irrelevant()
    everything = frozenset(range(n))
    facets = tuple(tuple(sorted(everything - c)) for c in _minimal_transversals(supports))
    return SimplicialComplex(ideal.vars, facets)
