"""Chordality and holes (chordless cycles of length at least 4)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import TooLarge
from .simplicial import Graph

BRUTE_FORCE_CAP = 14


@dataclass(frozen=True, order=True)
class MinimalCycle:
    """A hole, stored in canonical rotation.

    The smallest vertex comes first and the walk goes towards the smaller of
    its two neighbours. Ordering is by length, then vertex list.
    """

    length: int
    vertices: tuple[int, ...]

    @classmethod
    def canonical(cls, cycle) -> MinimalCycle:
        c = list(cycle)
        k = c.index(min(c))
        c = c[k:] + c[:k]
        if len(c) > 2 and c[-1] < c[1]:
            c = [c[0]] + c[:0:-1]
        return cls(len(c), tuple(c))

    def names(self, g: Graph) -> list[str]:
        return [g.vertices[v] for v in self.vertices]

    def __len__(self):
        return self.length


def is_hole(g: Graph, cycle) -> bool:
    c = list(cycle)
    q = len(c)
    if q < 4 or len(set(c)) != q:
        return False
    for a in range(q):
        for b in range(a + 1, q):
            consecutive = b == a + 1 or (a == 0 and b == q - 1)
            if g.has_edge(c[a], c[b]) != consecutive:
                return False
    return True


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search by partition refinement.

    Cells of the ordered partition form a doubly linked list; each visited
    vertex splits the cells holding its unvisited neighbours, moving those
    neighbours into a fresh cell just in front.
    """
    n = len(g)
    if n == 0:
        return []
    # cell fields: members (insertion-ordered dict), prev, next, split
    head = {"members": dict.fromkeys(range(n)), "prev": None, "next": None, "split": None}
    cell_of = {v: head for v in range(n)}
    order: list[int] = []
    visited = [False] * n
    while head is not None:
        v = next(iter(head["members"]))
        del head["members"][v]
        if not head["members"]:
            head = head["next"]
            if head is not None:
                head["prev"] = None
        order.append(v)
        visited[v] = True
        touched = []
        for w in sorted(g.adj[v]):
            if visited[w]:
                continue
            cell = cell_of[w]
            if cell["split"] is None:
                fresh = {"members": {}, "prev": cell["prev"], "next": cell, "split": None}
                if cell["prev"] is None:
                    head = fresh
                else:
                    cell["prev"]["next"] = fresh
                cell["prev"] = fresh
                cell["split"] = fresh
                touched.append(cell)
            del cell["members"][w]
            cell["split"]["members"][w] = None
            cell_of[w] = cell["split"]
        for cell in touched:
            cell["split"] = None
            if not cell["members"]:
                prev, nxt = cell["prev"], cell["next"]
                prev["next"] = nxt
                if nxt is not None:
                    nxt["prev"] = prev
    return order


def is_perfect_elimination(g: Graph, order: list[int]) -> bool:
    """Check that ``reversed(order)`` eliminates simplicial vertices."""
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        if any(u != parent and u not in g.adj[parent] for u in earlier):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination(g, lex_bfs(g))


def _shortest_hole_length(g: Graph) -> int | None:
    # a shortest u-v path avoiding the edge uv and the common neighbours of
    # u and v is induced, so it closes into a hole through uv
    adj = g.adj
    best = None
    for u, v in sorted(g.edges):
        banned = adj[u] & adj[v]
        dist = {v: 0}
        queue = deque([v])
        found = None
        while queue:
            a = queue.popleft()
            if best is not None and dist[a] + 2 >= best:
                break
            for b in adj[a]:
                if b in dist or b in banned or (a == v and b == u):
                    continue
                dist[b] = dist[a] + 1
                if b == u:
                    found = dist[b] + 1
                    break
                queue.append(b)
            if found:
                break
        if found and (best is None or found < best):
            best = found
    return best


def _holes(g: Graph, min_len: int, max_len: int) -> Iterator[MinimalCycle]:
    """Each hole with ``min_len <= length <= max_len`` exactly once."""
    adj = g.adj
    for s in range(len(g)):
        path = [s]
        on_path = {s}

        def extend():
            last = path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in on_path:
                    continue
                others = (adj[w] & on_path) - {last}
                if others == {s} and len(path) > 1:
                    if len(path) + 1 >= max(min_len, 4) and path[1] < w:
                        yield MinimalCycle(len(path) + 1, tuple(path) + (w,))
                elif not others and len(path) + 1 < max_len:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def shortest_hole(g: Graph) -> MinimalCycle | None:
    length = _shortest_hole_length(g)
    if length is None:
        return None
    return min(_holes(g, length, length))


def enumerate_holes(g: Graph, max_len: int) -> list[MinimalCycle]:
    if max_len < 4:
        raise ValueError("holes have length at least 4")
    return sorted(_holes(g, 4, max_len))


def brute_force_shortest_hole(g: Graph) -> MinimalCycle | None:
    n = len(g)
    if n > BRUTE_FORCE_CAP:
        raise TooLarge(f"brute force is capped at {BRUTE_FORCE_CAP} vertices, got {n}")
    adj = g.adj
    for k in range(4, n + 1):
        found = []
        for subset in combinations(range(n), k):
            s = set(subset)
            if any(len(adj[v] & s) != 2 for v in subset):
                continue
            # 2-regular; it is a single cycle iff the walk covers everything
            walk = [subset[0]]
            prev, cur = None, subset[0]
            while True:
                nxt = min(w for w in adj[cur] & s if w != prev) if prev is None else next(
                    w for w in adj[cur] & s if w != prev
                )
                if nxt == subset[0]:
                    break
                walk.append(nxt)
                prev, cur = cur, nxt
            if len(walk) == k:
                found.append(MinimalCycle.canonical(walk))
        if found:
            return min(found)
    return None
