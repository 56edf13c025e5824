"""
PipeDegen – Pipe dreams
========================
Mapa subconjunto → permutación w_M, trazado de tuberías y los datos
derivados r(i,j), σ_i y τ de una partición (O, C).

CONVENCIÓN (documentada también en Permutation):
    w_M = ∏ s_{i,j} sobre (i,j) ∈ M ordenados por i y luego j, evaluado
    como función de derecha a izquierda. Es la única convención que
    reproduce s_{1,1}s_{1,2}s_{1,4}s_{2,2}s_{2,3} = (4,3,1,2) y la tabla
    de r(i,j) de referencia.

TUBERÍAS:
    La tubería i entra en (i,n) y avanza por la fila i hacia j menores;
    en un elemento de M ∪ A gira y avanza hacia i menores; en un
    elemento de M vuelve a girar. Sale de P desde la fila 1 por (1, j)
    y entonces w_M(i) = j.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.order_ideal import OrderIdeal
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.pipe_path import PipePath
from pipedegen.domain.value_objects.poset_element import (
    PosetElement,
    canonical_elements,
    validate_elements,
)
from pipedegen.domain.exceptions.domain_errors import InvalidInputError

# Direcciones de avance sobre el diagrama de Hasse
ALONG_ROW = "row"        # (i, j) → (i, j−1)
ACROSS_ROWS = "column"   # (i, j) → (i−1, j)


def w_of_subset(M: Iterable[tuple[int, int]], n: int) -> Permutation:
    """w_M como producto ordenado de transposiciones (s_{i,i} = id)."""
    elements = sorted(validate_elements(M, n))
    return Permutation.from_word(n, ((p.i, p.j) for p in elements if not p.is_diagonal))


def w_of_mask(mask: int, n: int) -> Permutation:
    """w_M para M dado como bitmask canónico (el orden canónico es el del producto)."""
    word = (
        (p.i, p.j)
        for b, p in enumerate(canonical_elements(n))
        if mask >> b & 1 and not p.is_diagonal
    )
    return Permutation.from_word(n, word)


def trace_pipe(M: Iterable[tuple[int, int]], n: int, entry_row: int) -> PipePath:
    """Camino de la tubería `entry_row`; su último elemento es (1, w_M(entry_row))."""
    if not 1 <= entry_row <= n:
        raise InvalidInputError(f"fila de entrada fuera de [1,{n}]", field="entry_row", value=entry_row)
    marked = validate_elements(M, n)
    current = PosetElement(entry_row, n)
    direction = ALONG_ROW
    path = [current]
    while True:
        if direction == ALONG_ROW and (current in marked or current.is_diagonal):
            direction = ACROSS_ROWS
        elif direction == ACROSS_ROWS and current in marked:
            direction = ALONG_ROW
        if direction == ALONG_ROW:
            following = PosetElement(current.i, current.j - 1)
        else:
            following = PosetElement(current.i - 1, current.j)
        if following.i < 1 or following.j < following.i:
            break
        path.append(following)
        current = following
    return PipePath(entry_row=entry_row, elements=tuple(path), exit_value=current.j)


def w_via_crossings(M: Iterable[tuple[int, int]], n: int) -> Permutation:
    """
    Caracterización alternativa w_M = w′·w₀, con w′ = ∏ s_{j−i} sobre
    (i,j) ∈ P∖M en orden canónico (s_m = (m, m+1), s_0 = id).
    """
    chosen = validate_elements(M, n)
    word = (
        (p.j - p.i, p.j - p.i + 1)
        for p in canonical_elements(n)
        if p not in chosen and p.j > p.i
    )
    return Permutation.from_word(n, word).compose(Permutation.longest(n))


# ─── Datos derivados de (O, C) ──────────────────────────────────────────


@lru_cache(maxsize=4096)
def r_table(oc: OCPartition) -> tuple[tuple[int, ...], ...]:
    """Filas (r(i,1), …, r(i,n)) para i = 1..n."""
    n = oc.n
    poset = gt_poset(n)
    w_order = w_of_mask(oc.marked_mask, n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i <= j:
                principal = OrderIdeal(n, poset.generated_mask([(i, j)]))
                row.append(w_of_mask(poset.m_oc_mask(principal, oc), n)(i))
            else:
                row.append(w_order(j))
        rows.append(tuple(row))
    return tuple(rows)


def r_value(oc: OCPartition, i: int, j: int) -> int:
    """r(i,j) = w^{⟨(i,j)⟩}(i) si i ≤ j;  w^P(j) = w_O(j) si i > j."""
    if not (1 <= i <= oc.n and 1 <= j <= oc.n):
        raise InvalidInputError(f"(i,j)=({i},{j}) fuera de [1,{oc.n}]²", field="ij", value=(i, j))
    return r_table(oc)[i - 1][j - 1]


@lru_cache(maxsize=4096)
def sigma_tau(oc: OCPartition) -> tuple[tuple[Permutation, ...], Permutation]:
    """σ_i = inversa de (r(i,1), …, r(i,n));  τ = σ_n = w_O^{-1}."""
    sigmas = tuple(Permutation(row).inverse() for row in r_table(oc))
    return sigmas, sigmas[-1]


def sigma_by_pipe(oc: OCPartition, i: int, j: int) -> int:
    """
    σ_i(j) por la tubería que entra en (1,j) desde abajo a la izquierda y
    gira en O ∪ A: el primer (i,l) que visita da l; si no visita la fila i,
    su último elemento es (σ_i(j), n).
    """
    n = oc.n
    a, b = 1, j
    across = True  # (a, b) → (a+1, b); si no, (a, b) → (a, b+1)
    while True:
        if a == i:
            return b
        if oc.is_marked((a, b)):
            across = not across
        if across:
            a_next, b_next = a + 1, b
        else:
            a_next, b_next = a, b + 1
        if b_next > n or a_next > b_next:
            return a
        a, b = a_next, b_next
