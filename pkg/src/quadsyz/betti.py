"""Graded Betti tables of monomial ideals, by two independent routes.

``hochster_table`` sums reduced homology of full subcomplexes of the
Stanley-Reisner complex. ``koszul_table`` computes Tor of S/I directly as the
homology of the Koszul complex tensored with S/I, one multidegree at a time.
Tables index the ideal: beta_{i,j}(I) = beta_{i+1,j}(S/I).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field as dc_field
from itertools import combinations

from .errors import DegreeCapTooLow, IncompleteTable, NotSquarefree, TooManyVariables
from .homology import QQ, FieldSpec, homology_of_masks, sparse_rank
from .ideal import MonomialIdeal, coordinate_section, degree, lcm, polarize, support
from .simplicial import sr_complex
from .verdict import N2pIndex

DEFAULT_MAX_VARS = 20


@dataclass(frozen=True)
class GradedBettiTable:
    entries: dict[tuple[int, int], int]
    field: FieldSpec = QQ
    fingerprint: str = dc_field(default="", compare=False)
    # None means complete; otherwise only degrees <= this value were computed
    trusted_max_degree: int | None = None
    multigraded: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def is_complete(self) -> bool:
        return self.trusted_max_degree is None

    def rows(self) -> list[list[int]]:
        return [[i, j, m] for (i, j), m in self.entries.items()]

    def render(self) -> str:
        """Macaulay2-style table: column i, row j - i."""
        if not self.entries:
            return "(zero table)"
        cols = range(max(i for i, _ in self.entries) + 1)
        shifts = sorted({j - i for i, j in self.entries})
        width = max(len(str(m)) for m in self.entries.values()) + 1
        lines = [" " * 6 + "".join(str(i).rjust(width) for i in cols)]
        for s in range(shifts[0], shifts[-1] + 1):
            cells = "".join(
                (str(self[i, i + s]) if self[i, i + s] else ".").rjust(width) for i in cols
            )
            lines.append(f"{s:>4}: {cells}")
        return "\n".join(lines)


def _is_cone(faces_by_size, vertices) -> bool:
    # v is an apex iff faces with v match faces without v one to one
    total = 1 + sum(len(fs) for fs in faces_by_size)
    for v in vertices:
        bit = 1 << v
        with_v = sum(1 for fs in faces_by_size for f in fs if f & bit)
        if 2 * with_v == total:
            return True
    return False


def _sweep_sizes(faces_by_size, n, sizes, char):
    field_ = FieldSpec(char)
    entries: dict = {}
    fine: dict = {}
    for j in sizes:
        for w_idx in combinations(range(n), j):
            w = 0
            for v in w_idx:
                w |= 1 << v
            restricted = [[]] + [[f for f in fs if f | w == w] for fs in faces_by_size[1:]]
            if _is_cone(restricted, w_idx):
                continue
            for k, h in homology_of_masks(restricted, field_).items():
                i = j - k - 2
                if h and i >= 0:
                    entries[i, j] = entries.get((i, j), 0) + h
                    fine[i, w_idx] = h
    return entries, fine


def hochster_table(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    max_vars: int = DEFAULT_MAX_VARS,
    workers: int = 1,
) -> GradedBettiTable:
    if not ideal.is_squarefree:
        raise NotSquarefree(f"{ideal} is not squarefree; polarize first")
    n = ideal.nvars
    if n > max_vars:
        raise TooManyVariables(n, max_vars)
    # variables that are generators are not faces; a W made only of them
    # restricts to the irrelevant complex
    ghosts = {support(g)[0] for g in ideal.gens if degree(g) == 1}
    real = [v for v in range(n) if v not in ghosts]
    faces_by_size: list[list[int]] = [[]]
    if real:
        delta = sr_complex(coordinate_section(ideal, [ideal.vars[v] for v in real]))
        faces_by_size = [[] for _ in range(delta.dim + 2)]
        for f in delta.all_faces:
            mask = 0
            for v in f:
                mask |= 1 << real[v]
            faces_by_size[len(f)].append(mask)
    for fs in faces_by_size:
        fs.sort()
    # without ghosts, |W| < 2 contributes nothing in nonnegative homological degree
    sizes = list(range(1 if ghosts else 2, n + 1))
    if workers > 1 and len(sizes) > 1:
        chunks = [sizes[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _sweep_sizes,
                    [faces_by_size] * len(chunks),
                    [n] * len(chunks),
                    chunks,
                    [field.characteristic] * len(chunks),
                )
            )
    else:
        parts = [_sweep_sizes(faces_by_size, n, sizes, field.characteristic)]
    entries: dict = {}
    fine: dict = {}
    for e, f in parts:
        for key, v in e.items():
            entries[key] = entries.get(key, 0) + v
        fine.update(f)
    names = ideal.vars.names
    multigraded = {
        (i, tuple(names[v] for v in w)): h for (i, w), h in sorted(fine.items())
    }
    return GradedBettiTable(entries, field, str(ideal), None, multigraded)


def lcm_lattice(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    """All least common multiples of nonempty sets of generators."""
    lattice = set(ideal.gens)
    frontier = set(ideal.gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in ideal.gens:
                m = lcm(a, g)
                if m not in lattice:
                    fresh.add(m)
        lattice |= fresh
        frontier = fresh
    return lattice


def _koszul_strand_tor(ideal: MonomialIdeal, a: tuple[int, ...], field: FieldSpec) -> dict[int, int]:
    """dim Tor_i(S/I, k)_a for all i, from the multidegree-a Koszul strand."""
    supp = [v for v, e in enumerate(a) if e]
    basis: dict[int, list[tuple[int, ...]]] = {}
    for size in range(len(supp) + 1):
        for t in combinations(supp, size):
            m = list(a)
            for v in t:
                m[v] -= 1
            if not ideal.contains(tuple(m)):
                basis.setdefault(size, []).append(t)
    ranks = {}
    for size, ts in basis.items():
        if size == 0:
            continue
        lower = set(basis.get(size - 1, ()))
        cols = []
        for t in ts:
            col = {}
            for pos in range(size):
                face = t[:pos] + t[pos + 1:]
                # e_T (x) m  ->  sum_t +- e_{T-t} (x) x_t m, zero once x_t m lies in I
                if face in lower:
                    col[face] = -1 if pos % 2 else 1
            cols.append(col)
        ranks[size] = sparse_rank(cols, field)
    return {
        size: len(ts) - ranks.get(size, 0) - ranks.get(size + 1, 0)
        for size, ts in basis.items()
    }


def koszul_table(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    max_total_degree: int | None = None,
) -> GradedBettiTable:
    """Betti table from Koszul homology.

    Tor of S/I is nonzero only in multidegrees from the lcm lattice of the
    generators, so the degree of the lcm of all generators bounds every
    entry. ``max_total_degree`` below that leaves the table marked
    incomplete; below the largest generator degree it is refused outright.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table here")
    if max_total_degree is not None and ideal.gens and max_total_degree < max(ideal.degrees()):
        raise DegreeCapTooLow(
            f"cap {max_total_degree} is below the generator degree {max(ideal.degrees())}"
        )
    bound = sum(ideal.lcm_all())
    cap = bound if max_total_degree is None else max_total_degree
    entries: dict = {}
    fine: dict = {}
    for a in sorted(lcm_lattice(ideal)):
        j = sum(a)
        if j > cap:
            continue
        for size, h in _koszul_strand_tor(ideal, a, field).items():
            if h and size >= 1:
                entries[size - 1, j] = entries.get((size - 1, j), 0) + h
                fine[size - 1, a] = h
    trusted = None if cap >= bound else cap
    return GradedBettiTable(entries, field, str(ideal), trusted, fine)


def betti_table_general(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    max_vars: int = DEFAULT_MAX_VARS,
    workers: int = 1,
) -> GradedBettiTable:
    """Hochster's formula applied to the polarization (coarse degrees agree)."""
    polar, _ = polarize(ideal)
    t = hochster_table(polar, field, max_vars, workers)
    return GradedBettiTable(t.entries, field, str(ideal), None, t.multigraded)


def n2p_from_table(table: GradedBettiTable) -> N2pIndex:
    if not table.is_complete:
        raise IncompleteTable(f"table only trusted up to degree {table.trusted_max_degree}")
    if any(i == 0 and j != 2 for i, j in table.entries):
        return N2pIndex.not_quadratic()
    bad = [i for i, j in table.entries if j > i + 2]
    if not bad:
        return N2pIndex.two_regular()
    return N2pIndex.finite(min(bad))


def regularity(table: GradedBettiTable) -> int:
    if not table.is_complete:
        raise IncompleteTable(f"table only trusted up to degree {table.trusted_max_degree}")
    if not table.entries:
        raise ValueError("regularity of the zero ideal is undefined")
    return max(j - i for i, j in table.entries)
