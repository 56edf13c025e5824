"""
PipeDegen – Marked chain-order polytopes
=========================================
Modelo de puntos enteros (sumas de Minkowski de indicadores 1_{M_{O,C}(J)}),
modelo de desigualdades (verificador), la transformación unimodular ξ y
el oráculo de dimensión de Weyl.

DECISIONES DE DISEÑO:
    - La representación primaria es el conjunto suma exacto
      a_1·S(ω_1) + … + a_{n−1}·S(ω_{n−1}); el modelo de desigualdades
      solo verifica.
    - Las cadenas de interior vacío (m = 0) entran en la familia de
      desigualdades: x_a ≥ x_b para a ≺ b en O ∪ A.
    - La caja de búsqueda del verificador es [0, λ(1)] fuera de la diagonal.
    - Aritmética exacta en todo el módulo: enteros o Fraction.

FÓRMULAS:
    dim V_λ = ∏_{i<j} (λ(i) − λ(j) + j − i) / (j − i)
    ξ(ε_{i,j}) = ε_{i,τr(i,j)} − ε_{i,τr(i,j')}   (i < j, j' = máx j' < j con (i,j') ∈ O∪A)
    ξ(ε_{i,i}) = ε_{i,τr(i,i)}
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

import numpy as np

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.services.pipe_dreams import r_table, sigma_tau, w_of_mask
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.lattice_point import LatticePoint, indicator_point, sumset
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable, ZVariable
from pipedegen.domain.value_objects.poset_element import canonical_elements, canonical_index
from pipedegen.domain.value_objects.unimodular_map import UnimodularMap
from pipedegen.domain.value_objects.weight import Weight
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.mcop")


def _check_weight(oc: OCPartition, lam: Weight) -> None:
    if lam.n != oc.n:
        raise InvalidInputError(
            f"peso de rango {lam.n} para partición con n={oc.n}", field="weight", value=lam.to_dict()
        )


# ─── Modelo de vértices / puntos enteros ────────────────────────────────


@lru_cache(maxsize=1024)
def fundamental_points(oc: OCPartition, k: int) -> frozenset[LatticePoint]:
    """{1_{M_{O,C}(J)} : J ∈ 𝒥_k}; exactamente C(n,k) puntos 0/1 distintos."""
    if not 1 <= k <= oc.n - 1:
        raise InvalidInputError(f"k={k} fuera de [1,{oc.n - 1}]", field="k", value=k)
    poset = gt_poset(oc.n)
    return frozenset(
        indicator_point(poset.m_oc_mask(J, oc), poset.size) for J in poset.ideals(k)
    )


def lattice_points(
    oc: OCPartition,
    lam: Weight,
    deadline: Deadline | None = None,
) -> frozenset[LatticePoint]:
    """𝒪_{O,C}(λ) ∩ ℤ^P como suma de Minkowski iterada de los conjuntos fundamentales."""
    _check_weight(oc, lam)
    size = gt_poset(oc.n).size
    points: frozenset[LatticePoint] = frozenset({(0,) * size})
    for step, k in enumerate(lam.factors):
        if deadline is not None:
            deadline.check("lattice_points", partial={"factors_done": step})
        points = sumset(points, fundamental_points(oc, k))
    logger.debug(f"{oc.label()} λ={lam}: {len(points)} puntos enteros")
    return points


# ─── Modelo de desigualdades ────────────────────────────────────────────


def contains_ineq(x: Sequence[int | Fraction], oc: OCPartition, lam: Weight) -> bool:
    """
    Pertenencia a 𝒪_{O,C}(λ) por desigualdades.

    Para cada a ∈ O∪A se calcula por programación dinámica la cadena de
    peso máximo a ≺ c_1 ≺ … ≺ c_m ≺ b con c_l ∈ C; el orden canónico de P
    es una extensión lineal de ⪯.
    """
    _check_weight(oc, lam)
    poset = gt_poset(oc.n)
    elements = poset.elements
    if len(x) != poset.size:
        raise InvalidInputError(
            f"punto de longitud {len(x)} para |P|={poset.size}", field="x", value=len(x)
        )
    for i in range(1, oc.n + 1):
        if x[canonical_index(i, i, oc.n)] != lam.lam(i):
            return False
    marked = [oc.is_marked(p) for p in elements]
    if any(x[b] < 0 for b in range(poset.size) if not marked[b]):
        return False

    strict = poset.leq_matrix & ~np.eye(poset.size, dtype=bool)
    for a in range(poset.size):
        if not marked[a]:
            continue
        best: dict[int, int | Fraction] = {}
        for c in range(a + 1, poset.size):
            if marked[c] or not strict[a, c]:
                continue
            below = [best[d] for d in best if strict[d, c]]
            best[c] = x[c] + max(below, default=0)
        for b in range(a + 1, poset.size):
            if not marked[b] or not strict[a, b]:
                continue
            chain = max((best[c] for c in best if strict[c, b]), default=0)
            if chain > x[a] - x[b]:
                return False
    return True


def integer_points_ineq(
    oc: OCPartition,
    lam: Weight,
    deadline: Deadline | None = None,
) -> frozenset[LatticePoint]:
    """Puntos enteros del modelo de desigualdades dentro de la caja [0, λ(1)]^{P∖A}."""
    _check_weight(oc, lam)
    poset = gt_poset(oc.n)
    free = [b for b, p in enumerate(poset.elements) if not p.is_diagonal]
    base = [0] * poset.size
    for i in range(1, oc.n + 1):
        base[canonical_index(i, i, oc.n)] = lam.lam(i)
    found = set()
    for count, values in enumerate(itertools.product(range(lam.lam(1) + 1), repeat=len(free))):
        if deadline is not None and count % 4096 == 0:
            deadline.check("integer_points_ineq", partial={"visited": count})
        for b, v in zip(free, values):
            base[b] = v
        if contains_ineq(base, oc, lam):
            found.add(tuple(base))
    return frozenset(found)


# ─── Transformación unimodular ξ ────────────────────────────────────────


def previous_marked(oc: OCPartition, i: int, j: int) -> int:
    """Mayor j' < j con (i, j') ∈ O ∪ A (existe siempre: (i,i) ∈ A)."""
    for jp in range(j - 1, i - 1, -1):
        if oc.is_marked((i, jp)):
            return jp
    raise InvalidInputError(f"({i},{j}) no tiene predecesor marcado", field="ij", value=(i, j))


@lru_cache(maxsize=1024)
def xi_map(oc: OCPartition) -> UnimodularMap:
    n = oc.n
    elements = canonical_elements(n)
    r = r_table(oc)
    _, tau = sigma_tau(oc)
    matrix = np.zeros((len(elements), len(elements)), dtype=np.int64)
    for col, p in enumerate(elements):
        i, j = p
        target = tau(r[i - 1][j - 1])
        matrix[canonical_index(i, target, n), col] += 1
        if i < j:
            jp = previous_marked(oc, i, j)
            matrix[canonical_index(i, tau(r[i - 1][jp - 1]), n), col] -= 1
    return UnimodularMap(labels=tuple(tuple(p) for p in elements), matrix=matrix)


def transformed_fundamental_points(oc: OCPartition, k: int) -> frozenset[LatticePoint]:
    """Puntos ε_{1,τw^J(1)} + … + ε_{k,τw^J(k)} para J ∈ 𝒥_k."""
    poset = gt_poset(oc.n)
    _, tau = sigma_tau(oc)
    points = set()
    for J in poset.ideals(k):
        w = w_of_mask(poset.m_oc_mask(J, oc), oc.n)
        mask = sum(1 << canonical_index(a, tau(w(a)), oc.n) for a in range(1, k + 1))
        points.add(indicator_point(mask, poset.size))
    return frozenset(points)


def gt_pi_contains(x: Sequence[int | Fraction], lam: Weight) -> bool:
    """
    Descripción explícita de Π_λ para O = P∖A: x ≥ 0, sumas de filas λ(i) y
    Σ_{l≥j} x_{i,l} − Σ_{l≥j+1} x_{i+1,l} ≤ a_i para i < j.
    """
    n = lam.n
    if len(x) != len(canonical_elements(n)):
        raise InvalidInputError("punto de longitud incorrecta", field="x", value=len(x))
    if any(v < 0 for v in x):
        return False

    def tail(i: int, j: int) -> int | Fraction:
        return sum(x[canonical_index(i, l, n)] for l in range(max(i, j), n + 1))

    for i in range(1, n + 1):
        if tail(i, i) != lam.lam(i):
            return False
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if tail(i, j) - tail(i + 1, j + 1) > lam.a[i - 1]:
                return False
    return True


# ─── Oráculos y graduación ──────────────────────────────────────────────


def weyl_dim(lam: Weight, n: int | None = None) -> int:
    """Fórmula de dimensión de Weyl, exacta."""
    n = lam.n if n is None else n
    if n != lam.n:
        raise InvalidInputError(f"peso de rango {lam.n} con n={n}", field="n", value=n)
    value = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value *= Fraction(lam.lam(i) - lam.lam(j) + j - i, j - i)
    return int(value)


def graded_degree(item: Monomial | PlueckerVariable | Iterable[Hashable], n: int) -> tuple[int, ...]:
    """
    Graduación en ℤ^{n−1}: grad X_S = e_{|S|}; grad z_{i,j} = ε_i − ε_{i−1}.
    Acepta un monomio en z, una variable de Plücker o un iterable de ellas.
    """
    degree = [0] * (n - 1)
    if isinstance(item, PlueckerVariable):
        degree[item.k - 1] += 1
        return tuple(degree)
    if isinstance(item, Monomial):
        for var, exp in item.exps:
            if not isinstance(var, ZVariable) or not 1 <= var.i <= n - 1:
                raise InvalidInputError(f"variable sin graduación: {var}", field="variable", value=var)
            degree[var.i - 1] += exp
            if var.i >= 2:
                degree[var.i - 2] -= exp
        return tuple(degree)
    for part in item:
        degree = [a + b for a, b in zip(degree, graded_degree(part, n))]
    return tuple(degree)
