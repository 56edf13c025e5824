"""
PipeDegen – Domain Value Object: PosetElement
==============================================
Par (i, j) del poset de Gelfand–Tsetlin P = {(i, j) : 1 ≤ i ≤ j ≤ n}.

- NamedTuple → inmutable, hasheable e intercambiable con tuplas (i, j),
  lo que permite pasar literales como (1, 2) en toda la API.
- El orden natural de tuplas (i luego j) ES el orden canónico de índices
  que usan los bitsets de ideales y particiones.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from pipedegen.domain.exceptions.domain_errors import InvalidInputError


class PosetElement(NamedTuple):
    """Elemento (i, j) de P; la diagonal A son los (i, i)."""

    i: int
    j: int

    @property
    def is_diagonal(self) -> bool:
        return self.i == self.j

    def leq(self, other: tuple[int, int]) -> bool:
        """(i,j) ⪯ (i',j') ⇔ i ≤ i' y j ≤ j'."""
        return self.i <= other[0] and self.j <= other[1]

    def label(self) -> str:
        return f"({self.i},{self.j})"

    def to_dict(self) -> list[int]:
        return [self.i, self.j]


def validate_element(p: tuple[int, int], n: int) -> PosetElement:
    """Normaliza una tupla a PosetElement verificando 1 ≤ i ≤ j ≤ n."""
    i, j = p
    if not (1 <= i <= j <= n):
        raise InvalidInputError(f"({i},{j}) no pertenece a P para n={n}", field="element", value=(i, j))
    return PosetElement(i, j)


def validate_elements(items: Iterable[tuple[int, int]], n: int) -> frozenset[PosetElement]:
    return frozenset(validate_element(p, n) for p in items)


@lru_cache(maxsize=None)
def canonical_elements(n: int) -> tuple[PosetElement, ...]:
    """Todos los elementos de P en orden canónico (i creciente, luego j)."""
    return tuple(PosetElement(i, j) for i in range(1, n + 1) for j in range(i, n + 1))


@lru_cache(maxsize=None)
def off_diagonal_elements(n: int) -> tuple[PosetElement, ...]:
    """P∖A en orden canónico; sus posiciones indexan los bitmasks de OCPartition."""
    return tuple(p for p in canonical_elements(n) if not p.is_diagonal)


def canonical_index(i: int, j: int, n: int) -> int:
    """Posición de (i, j) en canonical_elements(n)."""
    offset = (i - 1) * (n + 1) - (i - 1) * i // 2
    return offset + (j - i)


def poset_size(n: int) -> int:
    return n * (n + 1) // 2
