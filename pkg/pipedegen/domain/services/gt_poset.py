"""
PipeDegen – Poset de Gelfand–Tsetlin
=====================================
El poset (P, ≺), sus ideales de orden y el conjunto M_{O,C}(J).

DECISIONES DE DISEÑO:
    - P se codifica como bitset de ancho fijo con índice canónico
      (i, j) ↦ posición; la relación ⪯ se precomputa como matriz de
      clausura numpy (bool) en la construcción. Las consultas sobre
      ideales son operaciones de bits O(1).
    - La enumeración de ideales usa que J ∩ fila i es un prefijo
      {(i,i),…,(i,m_i)} con n ≥ m_1 ≥ m_2 ≥ … ≥ m_k, m_i ≥ i.
    - ∅ y P se incluyen (grupos k=0 y k=n); los consumidores filtran.
    - Orden determinista: bitmask ascendente dentro de cada grupo.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from pipedegen.domain.exceptions.domain_errors import CapacityError, InvalidInputError
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.order_ideal import OrderIdeal
from pipedegen.domain.value_objects.poset_element import (
    PosetElement,
    canonical_elements,
    canonical_index,
    poset_size,
    validate_element,
)
from pipedegen.shared.config.settings import settings
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.gt_poset")


class GTPoset:
    """
    Tablas precomputadas de P para un n fijo.

    Attributes:
        leq_matrix: leq_matrix[a, b] ⇔ elements[a] ⪯ elements[b]
        cover_matrix: cover_matrix[a, b] ⇔ elements[a] ⋖ elements[b] (arista de Hasse)
    """

    def __init__(self, n: int, bitset_width: int | None = None):
        if n < 2:
            raise InvalidInputError(f"se requiere n ≥ 2 (n={n})", field="n", value=n)
        width = bitset_width if bitset_width is not None else settings.bitset_width
        size = poset_size(n)
        if size > width:
            raise CapacityError(
                f"|P| = {size} excede el ancho de bitset configurado ({width})",
                limit=width,
                requested=size,
            )
        self.n = n
        self.size = size
        self.elements: tuple[PosetElement, ...] = canonical_elements(n)

        coords = np.array(self.elements, dtype=np.int64)
        self.leq_matrix = (coords[:, None, 0] <= coords[None, :, 0]) & (
            coords[:, None, 1] <= coords[None, :, 1]
        )
        strict = self.leq_matrix & ~np.eye(size, dtype=bool)
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        self.cover_matrix = strict & ~two_step

        self._down = tuple(self._column_mask(self.leq_matrix[:, b]) for b in range(size))
        self._up_strict = tuple(self._column_mask(strict[a, :]) for a in range(size))
        self.diagonal_mask = sum(1 << canonical_index(i, i, n) for i in range(1, n + 1))
        self.full_mask = (1 << size) - 1
        self._ideals = self._enumerate()

    @staticmethod
    def _column_mask(flags: np.ndarray) -> int:
        mask = 0
        for idx in np.flatnonzero(flags):
            mask |= 1 << int(idx)
        return mask

    # ─── Ideales ────────────────────────────────────────────────────────

    def _enumerate(self) -> dict[int, tuple[OrderIdeal, ...]]:
        n = self.n
        groups: dict[int, list[int]] = {k: [] for k in range(n + 1)}

        def extend(row: int, upper: int, mask: int) -> None:
            groups[row - 1].append(mask)
            if row > n:
                return
            for last in range(row, upper + 1):
                row_mask = 0
                for j in range(row, last + 1):
                    row_mask |= 1 << canonical_index(row, j, n)
                extend(row + 1, last, mask | row_mask)

        extend(1, n, 0)
        return {k: tuple(OrderIdeal(n, m) for m in sorted(masks)) for k, masks in groups.items()}

    def ideals(self, k: int | None = None) -> tuple[OrderIdeal, ...]:
        """Ideales del grupo 𝒥_k (o todos, agrupados por k y luego por bitmask)."""
        if k is None:
            return tuple(J for group in self._ideals.values() for J in group)
        return self._ideals.get(k, ())

    def is_ideal(self, mask: int) -> bool:
        return all(self._down[b] & ~mask == 0 for b in range(self.size) if mask >> b & 1)

    def generated_mask(self, gens: Iterable[tuple[int, int]]) -> int:
        mask = 0
        for p in gens:
            q = validate_element(p, self.n)
            mask |= self._down[canonical_index(q.i, q.j, self.n)]
        return mask

    def maximal_mask(self, mask: int) -> int:
        """max_≺(J): elementos de J sin ningún elemento de J estrictamente encima."""
        result = 0
        for b in range(self.size):
            if mask >> b & 1 and self._up_strict[b] & mask == 0:
                result |= 1 << b
        return result

    def m_oc_mask(self, ideal: OrderIdeal, oc: OCPartition) -> int:
        return (ideal.mask & oc.marked_mask) | self.maximal_mask(ideal.mask)

    def elements_of(self, mask: int) -> frozenset[PosetElement]:
        return frozenset(p for b, p in enumerate(self.elements) if mask >> b & 1)

    def covers(self) -> tuple[tuple[PosetElement, PosetElement], ...]:
        """Aristas del diagrama de Hasse (p ⋖ q)."""
        rows, cols = np.nonzero(self.cover_matrix)
        return tuple(sorted((self.elements[a], self.elements[b]) for a, b in zip(rows, cols)))


@lru_cache(maxsize=None)
def gt_poset(n: int) -> GTPoset:
    """Instancia compartida por n (inmutable tras la construcción)."""
    logger.debug(f"Construyendo poset GT para n={n}")
    return GTPoset(n)


# ─── Operaciones públicas ───────────────────────────────────────────────


def poset_leq(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """(i,j) ⪯ (i',j') ⇔ i ≤ i' y j ≤ j'."""
    return p[0] <= q[0] and p[1] <= q[1]


def enumerate_ideals(n: int) -> dict[int, tuple[OrderIdeal, ...]]:
    """Todos los ideales de P agrupados por k = |J ∩ A|; |𝒥_k| = C(n, k)."""
    poset = gt_poset(n)
    return {k: poset.ideals(k) for k in range(n + 1)}


def ideal_generated_by(gens: Iterable[tuple[int, int]], n: int) -> OrderIdeal:
    """Menor ideal que contiene a gens."""
    return OrderIdeal(n, gt_poset(n).generated_mask(gens))


def maximal_elements(ideal: OrderIdeal) -> frozenset[PosetElement]:
    poset = gt_poset(ideal.n)
    return poset.elements_of(poset.maximal_mask(ideal.mask))


def m_oc(ideal: OrderIdeal, oc: OCPartition) -> frozenset[PosetElement]:
    """M_{O,C}(J) = (J ∩ (O ∪ A)) ∪ max_≺(J)."""
    if ideal.n != oc.n:
        raise InvalidInputError("ideal y partición con n distintos", field="n", value=(ideal.n, oc.n))
    poset = gt_poset(ideal.n)
    return poset.elements_of(poset.m_oc_mask(ideal, oc))
