"""Reduced simplicial homology over Q and prime fields, exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import VoidComplex
from .simplicial import Face, SimplicialComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``characteristic`` is 0, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        for prefix in ("fp:", "f"):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls(int(t[len(prefix):]))
        raise ValueError(f"unknown field {text!r}; use q, f<p> or fp:<p>")

    def __str__(self):
        return "q" if self.characteristic == 0 else f"f{self.characteristic}"


QQ = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer (or rational) matrix by fraction-free elimination."""
    rows = []
    for r in matrix:
        if any(isinstance(x, Fraction) for x in r):
            den = 1
            for x in r:
                den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
            r = [int(Fraction(x) * den) for x in r]
        rows.append(list(r))
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, m):
            a = rows[r][col]
            row_r, row_p = rows[r], rows[rank]
            for c in range(col + 1, n):
                # exact division is the Bareiss invariant
                row_r[c] = (p * row_r[c] - a * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def modular_rank(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in matrix]
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        row_p = [x * inv % p for x in rows[rank]]
        rows[rank] = row_p
        for r in range(rank + 1, m):
            a = rows[r][col]
            if a:
                rows[r] = [(x - a * y) % p for x, y in zip(rows[r], row_p)]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(matrix: Sequence[Sequence[int]], field: FieldSpec = QQ) -> int:
    if field.characteristic == 0:
        return bareiss_rank(matrix)
    return modular_rank(matrix, field.characteristic)


def sparse_rank(columns: Sequence[dict], field: FieldSpec = QQ) -> int:
    """Rank of a matrix given as sparse columns ``{row_key: entry}``.

    Incremental echelon form keyed on the largest row key. Over Q the
    elimination is fraction-free with content removal after each step.
    """
    p = field.characteristic
    pivots: dict = {}
    for col in columns:
        v = {k: x % p for k, x in col.items() if x % p} if p else {k: x for k, x in col.items() if x}
        while v:
            lead = max(v)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = v
                break
            a, b = prow[lead], v[lead]
            if p:
                f = b * pow(a, -1, p) % p
                for k, x in prow.items():
                    y = (v.get(k, 0) - f * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
            else:
                w = {k: a * x for k, x in v.items()}
                for k, x in prow.items():
                    y = w.get(k, 0) - b * x
                    if y:
                        w[k] = y
                    else:
                        w.pop(k, None)
                g = 0
                for x in w.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                v = {k: x // g for k, x in w.items()} if g > 1 else w
    return len(pivots)


@dataclass(frozen=True)
class BoundaryMatrices:
    """Augmented chain complex of a complex.

    ``faces[k]`` lists the k-faces in lexicographic order (``faces[-1]`` is
    ``[()]``); ``matrices[k]`` has one row per (k-1)-face and one column per
    k-face.
    """

    faces: dict[int, list[Face]]
    matrices: dict[int, list[list[int]]]

    def compose_is_zero(self) -> bool:
        for k in self.matrices:
            if k - 1 not in self.matrices:
                continue
            low, high = self.matrices[k - 1], self.matrices[k]
            for i in range(len(low)):
                for j in range(len(high[0]) if high else 0):
                    if sum(low[i][t] * high[t][j] for t in range(len(high))):
                        return False
        return True


def boundary_matrices(delta: SimplicialComplex) -> BoundaryMatrices:
    if not delta.facets:
        raise VoidComplex("void complex")
    faces = {k: delta.faces_of_dim(k) for k in range(-1, delta.dim + 1)}
    matrices = {}
    for k in range(0, delta.dim + 1):
        index = {f: i for i, f in enumerate(faces[k - 1])}
        mat = [[0] * len(faces[k]) for _ in faces[k - 1]]
        for j, f in enumerate(faces[k]):
            for pos in range(len(f)):
                mat[index[f[:pos] + f[pos + 1:]]][j] = -1 if pos % 2 else 1
        matrices[k] = mat
    return BoundaryMatrices(faces, matrices)


def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, int]:
    """``{k: dim H~_k}`` for k = -1 .. dim(delta)."""
    bm = boundary_matrices(delta)
    top = delta.dim
    ranks = {k: matrix_rank(bm.matrices[k], field) for k in bm.matrices}
    return {
        k: len(bm.faces[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, top + 1)
    }


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting the empty face in degree -1."""
    return sum((-1) ** k * c for k, c in delta.f_vector().items())


def homology_of_masks(faces_by_size: Sequence[Sequence[int]], field: FieldSpec = QQ) -> dict[int, int]:
    """Reduced homology of a complex given as bitmask faces grouped by size.

    ``faces_by_size[s]`` holds the faces with ``s`` vertices, ``s >= 1``;
    entry 0 is ignored. Used by the subset sweep, where building full
    complex objects per subset would dominate the cost.
    """
    top = max((s for s in range(1, len(faces_by_size)) if faces_by_size[s]), default=0)
    if top == 0:
        return {-1: 1}
    # rank of the augmentation is 1 once there is a vertex
    ranks = {0: 1}
    for s in range(2, top + 1):
        cols = []
        for f in faces_by_size[s]:
            col = {}
            sign = 1
            bits = f
            while bits:
                low = bits & -bits
                col[f ^ low] = sign
                sign = -sign
                bits ^= low
            cols.append(col)
        ranks[s - 1] = sparse_rank(cols, field)
    out = {-1: 0}
    for k in range(0, top):
        out[k] = len(faces_by_size[k + 1]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out
