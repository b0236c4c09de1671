from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

NOT_QUADRATIC = "not_quadratic"
FINITE = "finite"
TWO_REGULAR = "two_regular"


@total_ordering
@dataclass(frozen=True)
class N2pIndex:
    """Largest p with N_{2,p}: not quadratic < Finite(1) < Finite(2) < ... < 2-regular."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == FINITE:
            if self.p is None or self.p < 1:
                raise ValueError("a finite index needs p >= 1")
        elif self.kind in (NOT_QUADRATIC, TWO_REGULAR):
            if self.p is not None:
                raise ValueError(f"{self.kind} carries no p")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def finite(cls, p: int) -> N2pIndex:
        return cls(FINITE, p)

    @classmethod
    def two_regular(cls) -> N2pIndex:
        return cls(TWO_REGULAR)

    @classmethod
    def not_quadratic(cls) -> N2pIndex:
        return cls(NOT_QUADRATIC)

    def _key(self):
        return {NOT_QUADRATIC: (0, 0), FINITE: (1, self.p), TWO_REGULAR: (2, 0)}[self.kind]

    def __lt__(self, other):
        if not isinstance(other, N2pIndex):
            return NotImplemented
        return self._key() < other._key()

    def holds(self, p: int) -> bool:
        """Whether N_{2,p} holds."""
        if self.kind == NOT_QUADRATIC:
            return False
        return self.kind == TWO_REGULAR or p <= self.p

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.p is not None:
            out["p"] = self.p
        return out

    def __str__(self):
        if self.kind == FINITE:
            return f"Finite({self.p})"
        return "TwoRegular" if self.kind == TWO_REGULAR else "NotQuadratic"
