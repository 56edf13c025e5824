"""
PipeDegen – Domain Value Object: OrderIdeal
============================================
Ideal de orden (subconjunto cerrado hacia abajo) de P codificado como
bitmask sobre el índice canónico.

La validez (cierre hacia abajo) la garantiza quien lo construye:
GTPoset solo emite ideales cerrados. El orden de la dataclass es
(n, mask), el mismo orden determinista de la enumeración.
"""

from __future__ import annotations

from dataclasses import dataclass

from pipedegen.domain.value_objects.poset_element import (
    PosetElement,
    canonical_elements,
    canonical_index,
)


@dataclass(frozen=True, slots=True, order=True)
class OrderIdeal:
    """Ideal J ⊆ P; k = |J ∩ A| es su grupo en 𝒥_k."""

    n: int
    mask: int

    @property
    def members(self) -> tuple[PosetElement, ...]:
        elements = canonical_elements(self.n)
        return tuple(p for idx, p in enumerate(elements) if self.mask >> idx & 1)

    @property
    def k(self) -> int:
        """Cantidad de diagonales: |J ∩ A| (la diagonal es una cadena)."""
        count = 0
        while count < self.n and self.mask >> canonical_index(count + 1, count + 1, self.n) & 1:
            count += 1
        return count

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, tuple) or len(p) != 2:
            return False
        i, j = p
        if not (1 <= i <= j <= self.n):
            return False
        return bool(self.mask >> canonical_index(i, j, self.n) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "OrderIdeal") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "OrderIdeal") -> "OrderIdeal":
        return OrderIdeal(self.n, self.mask | other.mask)

    def intersection(self, other: "OrderIdeal") -> "OrderIdeal":
        return OrderIdeal(self.n, self.mask & other.mask)

    def label(self) -> str:
        return "{" + ",".join(p.label() for p in self.members) + "}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mask": self.mask,
            "members": [p.to_dict() for p in self.members],
        }
