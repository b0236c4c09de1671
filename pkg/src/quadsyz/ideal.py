"""Monomial ideals over an ordered set of variables.

Monomials are plain exponent tuples. An ideal keeps its minimal generators in
canonical order: total degree first, then lexicographic with the first
variable largest, so ``x0*x2`` sorts before ``x1*x3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import (
    ContainsLinearForm,
    EmptyVariableSet,
    GeneratorIsUnit,
    NotQuadratic,
    UnknownVariable,
)

if TYPE_CHECKING:
    from .simplicial import SimplicialComplex

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __getitem__(self, i):
        return self.names[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def indices(self, names: Iterable[str]) -> list[int]:
        return sorted({self.index(n) for n in names})

    def restrict(self, idx: Iterable[int]) -> VariableSet:
        return VariableSet(tuple(self.names[i] for i in sorted(idx)))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def canonical_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    if not any(m):
        return "1"
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _reduce(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # after sorting by degree, a divisor always precedes its multiples
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=canonical_key):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimally generated monomial ideal.

    Build through :func:`minimalize`; the constructor trusts its input. The
    unit ideal only arises from saturation and is stored as the single
    generator ``(0, ..., 0)``.
    """

    vars: VariableSet
    gens: tuple[Monomial, ...]

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def degrees(self) -> list[int]:
        return [degree(g) for g in self.gens]

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def lcm_all(self) -> Monomial:
        out = (0,) * self.nvars
        for g in self.gens:
            out = lcm(out, g)
        return out

    def format_gens(self) -> list[str]:
        return [format_monomial(g, self.vars.names) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.format_gens()) + ")"


def minimalize(gens: Iterable[Sequence[int]], vars: VariableSet | Sequence[str]) -> MonomialIdeal:
    if not isinstance(vars, VariableSet):
        vars = VariableSet(tuple(vars))
    mons = []
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != len(vars):
            raise ValueError(f"exponent vector {g} does not match {len(vars)} variables")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
        if not any(g):
            raise GeneratorIsUnit("generator equals 1")
        mons.append(g)
    return MonomialIdeal(vars, _reduce(mons))


def _with_unit(gens: Iterable[Monomial], vars: VariableSet) -> MonomialIdeal:
    return MonomialIdeal(vars, _reduce(gens))


def ideal_from_strings(vars: Sequence[str], *gens: str) -> MonomialIdeal:
    """Shorthand: ``ideal_from_strings("xyz", "x^2", "y*z")``."""
    vs = VariableSet(tuple(vars))
    mons = []
    for text in gens:
        e = [0] * len(vs)
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            e[vs.index(name)] += int(power) if power else 1
        mons.append(e)
    return minimalize(mons, vs)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.vars != b.vars:
        raise ValueError("ideals live in different rings")
    return _with_unit((lcm(f, g) for f, g in product(a.gens, b.gens)), a.vars)


def colon_power(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """(I : x_i^oo), by zeroing the x_i exponent of every generator."""
    return _with_unit((g[:i] + (0,) + g[i + 1:] for g in ideal.gens), ideal.vars)


def saturate_oracle(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.is_zero or ideal.nvars == 0:
        return ideal
    out = colon_power(ideal, 0)
    for i in range(1, ideal.nvars):
        out = intersect(out, colon_power(ideal, i))
    return out


def coordinate_section(ideal: MonomialIdeal, keep: Iterable[str]) -> MonomialIdeal:
    idx = ideal.vars.indices(keep)
    if not idx:
        raise EmptyVariableSet("coordinate section needs at least one variable")
    drop = set(range(ideal.nvars)) - set(idx)
    gens = [tuple(g[i] for i in idx) for g in ideal.gens if not any(g[i] for i in drop)]
    return MonomialIdeal(ideal.vars.restrict(idx), _reduce(gens))


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, dict[str, str]]:
    """Squarefree polarization.

    A variable ``x`` whose largest exponent ``e`` is at least 2 is renamed
    ``x#1`` in place and its extra copies ``x#2 .. x#e`` are appended after
    all original names, in original variable order. Other names are kept.
    Returns the polarized ideal and the map new name -> original name.
    """
    names = ideal.vars.names
    top = [max((g[i] for g in ideal.gens), default=0) for i in range(ideal.nvars)]
    new_names = [f"{n}#1" if e >= 2 else n for n, e in zip(names, top)]
    origin = dict(zip(new_names, names))
    # copies[i][k] = column of the (k+1)-th copy of variable i
    copies = [[i] for i in range(ideal.nvars)]
    for i, (n, e) in enumerate(zip(names, top)):
        for k in range(2, e + 1):
            copies[i].append(len(new_names))
            new_names.append(f"{n}#{k}")
            origin[f"{n}#{k}"] = n
    gens = []
    for g in ideal.gens:
        e = [0] * len(new_names)
        for i, power in enumerate(g):
            for k in range(power):
                e[copies[i][k]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(VariableSet(tuple(new_names)), _reduce(gens)), origin


def depolarize(ideal: MonomialIdeal, origin: dict[str, str], target: VariableSet) -> MonomialIdeal:
    """Collapse every family of copies back onto its original variable."""
    col = [target.index(origin[n]) for n in ideal.vars.names]
    gens = []
    for g in ideal.gens:
        e = [0] * len(target)
        for j, x in enumerate(g):
            e[col[j]] += x
        gens.append(tuple(e))
    return MonomialIdeal(target, _reduce(gens))


@dataclass(frozen=True)
class QuadraticDecomposition:
    delta: SimplicialComplex
    square_vertices: frozenset[int]

    def square_names(self) -> list[str]:
        return [self.delta.ground[i] for i in sorted(self.square_vertices)]

    def reassemble(self) -> MonomialIdeal:
        from .simplicial import sr_ideal

        base = sr_ideal(self.delta)
        n = len(self.delta.ground)
        squares = [tuple(2 if k == i else 0 for k in range(n)) for i in self.square_vertices]
        return MonomialIdeal(base.vars, _reduce(list(base.gens) + squares))


def quadratic_decompose(ideal: MonomialIdeal) -> QuadraticDecomposition:
    from .simplicial import sr_complex

    linear = [g for g in ideal.gens if degree(g) == 1]
    if linear:
        raise ContainsLinearForm(format_monomial(g, ideal.vars.names) for g in linear)
    bad = [g for g in ideal.gens if degree(g) != 2]
    if bad:
        raise NotQuadratic(format_monomial(g, ideal.vars.names) for g in bad)
    squares = frozenset(support(g)[0] for g in ideal.gens if not is_squarefree(g))
    squarefree = MonomialIdeal(ideal.vars, tuple(g for g in ideal.gens if is_squarefree(g)))
    return QuadraticDecomposition(sr_complex(squarefree), squares)


def is_saturated_quadratic(ideal: MonomialIdeal) -> bool:
    dec = quadratic_decompose(ideal)
    return all(any(v not in dec.square_vertices for v in f) for f in dec.delta.facets)
