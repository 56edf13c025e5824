"""
PipeDegen – Domain Value Object: OCPartition
=============================================
Partición O ⊔ C = P∖A que parametriza la degeneración.

Se guarda solo O como bitmask sobre P∖A en orden canónico
(bit b ⇔ off_diagonal_elements(n)[b] ∈ O); C es el complemento.
El hex de ese bitmask es el selector de partición de la CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from pipedegen.domain.exceptions.domain_errors import InvalidInputError, ParseError
from pipedegen.domain.value_objects.poset_element import (
    PosetElement,
    canonical_elements,
    canonical_index,
    off_diagonal_elements,
)


@dataclass(frozen=True, slots=True, order=True)
class OCPartition:
    """Parámetro (O, C) de los MCOP y de la degeneración tórica."""

    n: int
    order_mask: int

    def __post_init__(self) -> None:
        size = len(off_diagonal_elements(self.n))
        if self.order_mask < 0 or self.order_mask >> size:
            raise InvalidInputError(
                f"bitmask {self.order_mask:#x} fuera de P∖A para n={self.n}",
                field="order_mask",
                value=self.order_mask,
            )

    # ─── Constructores ──────────────────────────────────────────────────

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[tuple[int, int]]) -> "OCPartition":
        positions = _bit_positions(n)
        mask = 0
        for p in elements:
            key = PosetElement(*p)
            if key not in positions:
                raise InvalidInputError(
                    f"{key.label()} no pertenece a P∖A para n={n}", field="order_part", value=tuple(key)
                )
            mask |= 1 << positions[key]
        return cls(n, mask)

    @classmethod
    def from_hex(cls, n: int, text: str) -> "OCPartition":
        try:
            mask = int(text, 16)
        except ValueError as exc:
            raise ParseError(f"bitmask hexadecimal inválido: {text!r}", text=text) from exc
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "OCPartition":
        """O = ∅ (caso FFLV)."""
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "OCPartition":
        """O = P∖A (caso Gelfand–Tsetlin)."""
        return cls(n, (1 << len(off_diagonal_elements(n))) - 1)

    @classmethod
    def all_partitions(cls, n: int) -> Iterator["OCPartition"]:
        for mask in range(1 << len(off_diagonal_elements(n))):
            yield cls(n, mask)

    # ─── Consultas ──────────────────────────────────────────────────────

    @property
    def order_part(self) -> frozenset[PosetElement]:
        return frozenset(
            p for b, p in enumerate(off_diagonal_elements(self.n)) if self.order_mask >> b & 1
        )

    @property
    def chain_part(self) -> frozenset[PosetElement]:
        return frozenset(off_diagonal_elements(self.n)) - self.order_part

    def in_order(self, p: tuple[int, int]) -> bool:
        bit = _bit_positions(self.n).get(tuple(p))
        return bit is not None and bool(self.order_mask >> bit & 1)

    def is_marked(self, p: tuple[int, int]) -> bool:
        """p ∈ O ∪ A."""
        return p[0] == p[1] or self.in_order(p)

    @property
    def marked_mask(self) -> int:
        """Bitmask de O ∪ A sobre el índice canónico de P."""
        mask = 0
        for p in canonical_elements(self.n):
            if self.is_marked(p):
                mask |= 1 << canonical_index(p.i, p.j, self.n)
        return mask

    def to_hex(self) -> str:
        return f"{self.order_mask:#x}"

    def label(self) -> str:
        return "O={" + ",".join(p.label() for p in sorted(self.order_part)) + "}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "order_mask": self.to_hex(),
            "order_part": [p.to_dict() for p in sorted(self.order_part)],
        }


@lru_cache(maxsize=None)
def _bit_positions(n: int) -> dict[tuple[int, int], int]:
    return {tuple(p): b for b, p in enumerate(off_diagonal_elements(n))}
