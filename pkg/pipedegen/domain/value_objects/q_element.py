"""
PipeDegen – Domain Value Objects: poset semi-infinito Q
========================================================
Q = {(i, j) : i ≥ 1, j ≥ k+1, 0 ≤ j − i ≤ n − 1}; sus diagonales son
(i, i) con i ≥ k+1.

QPartition describe el conjunto infinito O de forma finita:
    O = {todas las diagonales} ∪ extra,   extra ⊆ filas ≤ horizon,
    y todo lo demás (en particular más allá del horizonte) está en C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from pipedegen.domain.exceptions.domain_errors import InvalidInputError


class QElement(NamedTuple):
    i: int
    j: int

    @property
    def is_diagonal(self) -> bool:
        return self.i == self.j

    def label(self) -> str:
        return f"({self.i},{self.j})"

    def to_dict(self) -> list[int]:
        return [self.i, self.j]


def in_q(i: int, j: int, n: int, k: int) -> bool:
    return i >= 1 and j >= k + 1 and 0 <= j - i <= n - 1


@dataclass(frozen=True, slots=True)
class QIdeal:
    """Ideal finito de Q; d = cantidad de diagonales que contiene."""

    n: int
    k: int
    members: frozenset[QElement]

    @property
    def d(self) -> int:
        return sum(1 for p in self.members if p.is_diagonal)

    def sorted_members(self) -> tuple[QElement, ...]:
        return tuple(sorted(self.members))

    def issubset(self, other: "QIdeal") -> bool:
        return self.members <= other.members

    def label(self) -> str:
        return "{" + ",".join(p.label() for p in self.sorted_members()) + "}"

    def to_dict(self) -> dict:
        return {"d": self.d, "members": [p.to_dict() for p in self.sorted_members()]}

    def __lt__(self, other: "QIdeal") -> bool:
        return (self.n, self.k, self.sorted_members()) < (other.n, other.k, other.sorted_members())


@dataclass(frozen=True, slots=True)
class QPartition:
    """Partición Q = O ⊔ C con todas las diagonales en O."""

    n: int
    k: int
    extra: frozenset[QElement]
    horizon: int

    def __post_init__(self) -> None:
        if self.n < 3 or not 1 <= self.k < self.n:
            raise InvalidInputError(
                f"se requiere n ≥ 3 y 1 ≤ k < n (n={self.n}, k={self.k})", field="n", value=(self.n, self.k)
            )
        for p in self.extra:
            if not in_q(p.i, p.j, self.n, self.k):
                raise InvalidInputError(f"{p.label()} no pertenece a Q", field="extra", value=tuple(p))
            if p.is_diagonal:
                raise InvalidInputError(
                    f"{p.label()} es diagonal (ya está en O)", field="extra", value=tuple(p)
                )
            if p.i > self.horizon:
                raise InvalidInputError(
                    f"{p.label()} está más allá del horizonte {self.horizon}", field="extra", value=tuple(p)
                )

    @classmethod
    def build(cls, n: int, k: int, extra: Iterable[tuple[int, int]], horizon: int) -> "QPartition":
        return cls(n, k, frozenset(QElement(*p) for p in extra), horizon)

    def in_order(self, p: tuple[int, int]) -> bool:
        return p[0] == p[1] or QElement(*p) in self.extra

    def is_marked(self, i: int, j: int) -> bool:
        """O ∪ {(1,1),…,(k,k)}: el conjunto marcado del orden de series."""
        if i == j:
            return True
        return in_q(i, j, self.n, self.k) and QElement(i, j) in self.extra

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "horizon": self.horizon,
            "order_extra": [p.to_dict() for p in sorted(self.extra)],
        }
