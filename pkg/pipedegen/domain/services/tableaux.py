"""
PipeDegen – (O,C)-tuplas y tablas (O,C)-semiestándar
=====================================================
Columnas admisibles, la condición semiestándar entre columnas, la
biyección tabla ↔ cadena de ideales y la enumeración por forma.

DECISIONES DE DISEÑO:
    - La enumeración primaria recorre cadenas J_1 ⊆ … ⊆ J_m y las
      convierte en tablas (columna de J = (w^J(1), …, w^J(k))); el
      llenado recursivo directo queda como oráculo de contraste.
    - Columna c ↦ menor ideal que contiene los (j, σ_j(Y_{c,j})); la tabla
      es semiestándar si y solo si esos ideales decrecen de izquierda a derecha.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import psi_columns, theta_monomial
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.services.mcop_polytope import lattice_points
from pipedegen.domain.services.pipe_dreams import sigma_tau
from pipedegen.domain.services.standard_monomials import standard_monomials
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.order_ideal import OrderIdeal
from pipedegen.domain.value_objects.polynomial import Monomial, ZVariable
from pipedegen.domain.value_objects.poset_element import canonical_elements
from pipedegen.domain.value_objects.tableau import Tableau, TableauPoint
from pipedegen.domain.value_objects.weight import Weight


def _validate_column(column: Sequence[int], n: int) -> tuple[int, ...]:
    column = tuple(column)
    if len(set(column)) != len(column):
        raise InvalidInputError(f"entradas repetidas en la columna {column}", field="column", value=column)
    if not 1 <= len(column) <= n - 1 or any(not 1 <= v <= n for v in column):
        raise InvalidInputError(f"columna {column} fuera de rango para n={n}", field="column", value=column)
    return column


# ─── (O,C)-tuplas ───────────────────────────────────────────────────────


def is_oc_tuple(column: Sequence[int], oc: OCPartition) -> bool:
    """σ_j(i_j) ≥ j, y para j < l: σ_{j+1}(i_j) = j o σ_{j+1}(i_j) > σ_l(i_l)."""
    column = _validate_column(column, oc.n)
    sigmas, _ = sigma_tau(oc)
    k = len(column)
    if any(sigmas[j - 1](column[j - 1]) < j for j in range(1, k + 1)):
        return False
    for j in range(1, k + 1):
        for l in range(j + 1, k + 1):
            shifted = sigmas[j](column[j - 1])
            if shifted != j and shifted <= sigmas[l - 1](column[l - 1]):
                return False
    return True


def oc_tuples(oc: OCPartition, k: int) -> tuple[tuple[int, ...], ...]:
    """Todas las (O,C)-tuplas de longitud k, en orden lexicográfico."""
    if not 1 <= k <= oc.n - 1:
        raise InvalidInputError(f"k={k} fuera de [1,{oc.n - 1}]", field="k", value=k)
    return tuple(t for t in itertools.permutations(range(1, oc.n + 1), k) if is_oc_tuple(t, oc))


# ─── Condición semiestándar ─────────────────────────────────────────────


def _columns_compatible(left: Sequence[int], right: Sequence[int], oc: OCPartition) -> bool:
    """Para cada j ≤ k_right existe j' ∈ [j, k_left] con σ_{j'}(left_{j'}) ≥ σ_j(right_j)."""
    sigmas, _ = sigma_tau(oc)
    for j in range(1, len(right) + 1):
        target = sigmas[j - 1](right[j - 1])
        if not any(sigmas[jp - 1](left[jp - 1]) >= target for jp in range(j, len(left) + 1)):
            return False
    return True


def is_oc_semistandard(tableau: Tableau, oc: OCPartition) -> bool:
    if not all(is_oc_tuple(col, oc) for col in tableau.columns):
        return False
    return all(
        _columns_compatible(tableau.columns[a], tableau.columns[b], oc)
        for a in range(len(tableau.columns))
        for b in range(a + 1, len(tableau.columns))
    )


# ─── Biyección con cadenas de ideales ───────────────────────────────────


def column_ideal(column: Sequence[int], oc: OCPartition) -> OrderIdeal:
    """Menor ideal que contiene los (j, σ_j(i_j))."""
    if not is_oc_tuple(column, oc):
        raise InvalidInputError(f"{tuple(column)} no es una (O,C)-tupla", field="column", value=tuple(column))
    sigmas, _ = sigma_tau(oc)
    gens = [(j, sigmas[j - 1](v)) for j, v in enumerate(column, start=1)]
    return OrderIdeal(oc.n, gt_poset(oc.n).generated_mask(gens))


def tableau_chain_bijection(tableau: Tableau, oc: OCPartition) -> tuple[OrderIdeal, ...] | None:
    """Cadena J_1 ⊇ J_2 ⊇ … de las columnas, o None si la tabla no es semiestándar."""
    ideals = tuple(column_ideal(col, oc) for col in tableau.columns)
    if all(b.issubset(a) for a, b in zip(ideals, ideals[1:])):
        return ideals
    return None


def chain_to_tableau(chain: Sequence[OrderIdeal], oc: OCPartition) -> Tableau:
    """Inversa: ideales en cualquier orden de inclusión → columnas de mayor a menor."""
    ordered = sorted(chain, key=lambda J: (J.k, J.mask.bit_count()), reverse=True)
    for a, b in zip(ordered, ordered[1:]):
        if not b.issubset(a):
            raise InvalidInputError("los ideales no forman una cadena", field="chain", value=[J.label() for J in chain])
    return Tableau(tuple(psi_columns(J, oc) for J in ordered))


# ─── Enumeración ────────────────────────────────────────────────────────


def enumerate_semistandard(
    lam: Weight,
    oc: OCPartition,
    deadline: Deadline | None = None,
) -> tuple[Tableau, ...]:
    """Tablas (O,C)-semiestándar de forma λ, vía cadenas de ideales."""
    chains = standard_monomials(lam, deadline=deadline)
    return tuple(sorted(chain_to_tableau(chain, oc) for chain in chains))


def enumerate_semistandard_direct(lam: Weight, oc: OCPartition) -> tuple[Tableau, ...]:
    """Llenado directo columna a columna (oráculo)."""
    heights = sorted(lam.factors, reverse=True)
    candidates = {k: oc_tuples(oc, k) for k in set(heights)}
    found: list[Tableau] = []

    def fill(prefix: tuple[tuple[int, ...], ...]) -> None:
        if len(prefix) == len(heights):
            found.append(Tableau(prefix))
            return
        for column in candidates[heights[len(prefix)]]:
            if all(_columns_compatible(left, column, oc) for left in prefix):
                fill(prefix + (column,))

    fill(())
    return tuple(sorted(found))


# ─── Puntos de tablas ───────────────────────────────────────────────────


def tableau_point(tableau: Tableau, n: int) -> TableauPoint:
    """x(Y) ∈ ℤ^{P̄}, P̄ = [1,n−1] × [1,n] en orden fila-mayor."""
    point = [0] * ((n - 1) * n)
    for col in tableau.columns:
        for row, value in enumerate(col, start=1):
            if not (1 <= row <= n - 1 and 1 <= value <= n):
                raise InvalidInputError(f"entrada {value} en la fila {row} para n={n}", field="tableau")
            point[(row - 1) * n + (value - 1)] += 1
    return tuple(point)


def theta_exponent_points(oc: OCPartition, lam: Weight) -> frozenset[TableauPoint]:
    """ζ(𝒪_{O,C}(λ) ∩ ℤ^P): exponentes de θ(z^x) restringidos a P̄."""
    n = oc.n
    elements = canonical_elements(n)
    points = set()
    for x in lattice_points(oc, lam):
        mono = Monomial.from_mapping({ZVariable(p.i, p.j): e for p, e in zip(elements, x)})
        image = theta_monomial(mono, oc).as_dict()
        if any(var.i == n and e for var, e in image.items()):
            raise InvalidInputError("θ(z^x) con exponentes en la fila n", field="x", value=x)
        points.add(tuple(image.get(ZVariable(i, j), 0) for i in range(1, n) for j in range(1, n + 1)))
    return frozenset(points)
