"""
PipeDegen – Degeneración tórica
================================
Menores de Plücker D_S, los mapas φ_{O,C}, φ_⋖, ψ y θ, y los chequeos
que certifican la degeneración para una partición (O, C).

RESPONSABILIDAD:
    - Construir D_S de forma exacta y su término inicial por fuerza bruta.
    - Verificar por generador: in_⋖ D_{w^J(1..k)} = z_{1,w^J(1)}⋯z_{k,w^J(k)}
      y el cuadrado conmutativo θ(φ_{O,C}(X_J)) = φ_⋖(ψ(X_J)).
    - Contar productos de monomios iniciales por multigrado (sagbi).
    - Triangularidad de ⋖^τ.

SIGNOS:
    D con columnas (w^J(1), …, w^J(k)) sin ordenar tiene el término
    diagonal con coeficiente +1; respecto de X ordenado el signo es el
    de ψ. Ambos se registran en GeneratorCheck.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.services.mcop_polytope import graded_degree, previous_marked, weyl_dim
from pipedegen.domain.services.monomial_order import (
    VarOrder,
    columns_monomial,
    greedy_initial_columns,
    initial_term,
    variable_order,
)
from pipedegen.domain.services.pipe_dreams import r_table, sigma_tau, w_of_mask
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.lattice_point import LatticePoint, sumset
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.order_ideal import OrderIdeal
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable, Polynomial, ZVariable
from pipedegen.domain.value_objects.unimodular_map import IntegerLinearMap
from pipedegen.domain.value_objects.weight import Weight
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.degeneration")


# ─── Menores de Plücker ─────────────────────────────────────────────────


@lru_cache(maxsize=8192)
def plucker_determinant(indices: tuple[int, ...], n: int) -> Polynomial:
    """
    Menor de (z_{i,j}) en las filas 1..k y las columnas `indices`, en ese orden.
    Con índices crecientes es D_S; con índices desordenados es (−1)^σ D_S.
    """
    indices = tuple(indices)
    k = len(indices)
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"k={k} fuera de [1,{n - 1}]", field="indices", value=indices)
    if len(set(indices)) != k:
        raise InvalidInputError(f"índices repetidos: {indices}", field="indices", value=indices)
    if any(not 1 <= j <= n for j in indices):
        raise InvalidInputError(f"índices fuera de [1,{n}]: {indices}", field="indices", value=indices)
    terms = []
    for perm in itertools.permutations(range(1, k + 1)):
        sign = Permutation(perm).sign()
        mono = Monomial.from_variables(ZVariable(row, indices[perm[row - 1] - 1]) for row in range(1, k + 1))
        terms.append((mono, sign))
    return Polynomial.from_terms(terms)


@lru_cache(maxsize=65536)
def minor_initial_term(indices: tuple[int, ...], order: VarOrder) -> tuple[Monomial, int]:
    return initial_term(plucker_determinant(tuple(indices), order.n), order)


def k_subsets(n: int, k: int) -> tuple[PlueckerVariable, ...]:
    return tuple(PlueckerVariable(c) for c in itertools.combinations(range(1, n + 1), k))


# ─── Mapas ψ, φ_{O,C}, θ ────────────────────────────────────────────────


def psi_columns(J: OrderIdeal, oc: OCPartition) -> tuple[int, ...]:
    """(w^J(1), …, w^J(k)) con w^J = w_{M_{O,C}(J)}."""
    k = J.k
    if not 1 <= k <= oc.n - 1:
        raise InvalidInputError(f"ψ solo está definido para 1 ≤ k ≤ n−1 (k={k})", field="k", value=k)
    w = w_of_mask(gt_poset(oc.n).m_oc_mask(J, oc), oc.n)
    return tuple(w(a) for a in range(1, k + 1))


def psi_map(J: OrderIdeal, oc: OCPartition) -> tuple[PlueckerVariable, int]:
    """ψ(X_J) = X_{w^J(1),…,w^J(k)} = signo · X_{ordenado}."""
    return PlueckerVariable.from_unsorted(psi_columns(J, oc))


def phi_oc(J: OrderIdeal, oc: OCPartition) -> Monomial:
    """φ_{O,C}(X_J) = z^{x_{O,C}(J)}."""
    poset = gt_poset(oc.n)
    members = poset.elements_of(poset.m_oc_mask(J, oc))
    return Monomial.from_variables(ZVariable(p.i, p.j) for p in members)


@lru_cache(maxsize=1024)
def theta_map(oc: OCPartition) -> IntegerLinearMap:
    """
    Matriz de exponentes de θ sobre las n² variables (etiqueta (i,j)).

        θ(z_{i,j}) = z_{i,r(i,j)}                         si i ≥ j
        θ(z_{i,j}) = z_{i,r(i,j)} / z_{i,r(i,j')}         si i < j
    """
    n = oc.n
    r = r_table(oc)
    labels = tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    position = {label: idx for idx, label in enumerate(labels)}
    matrix = np.zeros((n * n, n * n), dtype=np.int64)
    for col, (i, j) in enumerate(labels):
        matrix[position[(i, r[i - 1][j - 1])], col] += 1
        if i < j:
            jp = previous_marked(oc, i, j)
            matrix[position[(i, r[i - 1][jp - 1])], col] -= 1
    return IntegerLinearMap(labels=labels, matrix=matrix)


def theta_monomial(mono: Monomial, oc: OCPartition) -> Monomial:
    theta = theta_map(oc)
    vector = [mono.exponent(ZVariable(*label)) for label in theta.labels]
    image = theta.apply(vector)
    return Monomial.from_mapping({ZVariable(*label): e for label, e in zip(theta.labels, image)})


# ─── Chequeos por generador ─────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class GeneratorCheck:
    """Certificado de un generador X_J."""

    ideal: OrderIdeal
    columns: tuple[int, ...]
    pluecker: PlueckerVariable
    psi_sign: int
    expected: Monomial
    initial: Monomial
    initial_coefficient: int
    theta_image: Monomial

    @property
    def initial_matches(self) -> bool:
        return self.initial == self.expected

    @property
    def square_commutes(self) -> bool:
        return self.theta_image == self.initial

    @property
    def passed(self) -> bool:
        return self.initial_matches and self.square_commutes

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.label(),
            "psi": self.pluecker.label(),
            "psi_sign": self.psi_sign,
            "initial": self.initial.label(),
            "initial_coefficient": self.initial_coefficient,
            "expected": self.expected.label(),
            "theta_image": self.theta_image.label(),
            "passed": self.passed,
        }


def check_generator(J: OrderIdeal, oc: OCPartition) -> GeneratorCheck:
    columns = psi_columns(J, oc)
    variable, sign = PlueckerVariable.from_unsorted(columns)
    initial, coef = minor_initial_term(columns, variable_order(oc))
    return GeneratorCheck(
        ideal=J,
        columns=columns,
        pluecker=variable,
        psi_sign=sign,
        expected=columns_monomial(columns),
        initial=initial,
        initial_coefficient=coef,
        theta_image=theta_monomial(phi_oc(J, oc), oc),
    )


def check_generators(
    oc: OCPartition,
    signature: Iterable[int],
    deadline: Deadline | None = None,
) -> tuple[GeneratorCheck, ...]:
    poset = gt_poset(oc.n)
    checks = []
    for k in signature:
        if deadline is not None:
            deadline.check("check_generators", partial={"generators_done": len(checks)})
        checks.extend(check_generator(J, oc) for J in poset.ideals(k))
    failed = [c for c in checks if not c.passed]
    if failed:
        logger.error(f"{oc.label()}: {len(failed)} generadores fallan")
    return tuple(checks)


def psi_is_bijective(oc: OCPartition, k: int) -> bool:
    """Los conjuntos de índices ψ(X_J), J ∈ 𝒥_k, son distintos dos a dos."""
    images = {psi_map(J, oc)[0] for J in gt_poset(oc.n).ideals(k)}
    return len(images) == len(gt_poset(oc.n).ideals(k))


# ─── Conteo sagbi ───────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class SagbiCertificate:
    weight: Weight
    count: int
    expected: int
    homogeneous: bool

    @property
    def passed(self) -> bool:
        return self.homogeneous and self.count == self.expected

    def to_dict(self) -> dict:
        return {
            "weight": self.weight.to_dict(),
            "count": self.count,
            "expected": self.expected,
            "homogeneous": self.homogeneous,
            "passed": self.passed,
        }


def _exponent_point(mono: Monomial, n: int) -> LatticePoint:
    exps = mono.as_dict()
    return tuple(exps.get(ZVariable(i, j), 0) for i in range(1, n + 1) for j in range(1, n + 1))


def sagbi_count_check(
    oc: OCPartition,
    lam: Weight,
    deadline: Deadline | None = None,
) -> SagbiCertificate:
    """Productos distintos de monomios iniciales de multigrado λ frente a dim V_λ."""
    n = oc.n
    order = variable_order(oc)
    poset = gt_poset(n)
    generators: dict[int, frozenset[LatticePoint]] = {}
    homogeneous = True
    for k in lam.signature:
        monos = [minor_initial_term(psi_columns(J, oc), order)[0] for J in poset.ideals(k)]
        unit = tuple(1 if i == k else 0 for i in range(1, n))
        homogeneous &= all(graded_degree(m, n) == unit for m in monos)
        generators[k] = frozenset(_exponent_point(m, n) for m in monos)

    products: frozenset[LatticePoint] = frozenset({(0,) * (n * n)})
    for step, k in enumerate(lam.factors):
        if deadline is not None:
            deadline.check("sagbi_count_check", partial={"factors_done": step})
        products = sumset(products, generators[k])
    return SagbiCertificate(lam, len(products), weyl_dim(lam), homogeneous)


# ─── Triangularidad de ⋖^τ ──────────────────────────────────────────────


def twisted_order(oc: OCPartition) -> VarOrder:
    _, tau = sigma_tau(oc)
    return variable_order(oc).twisted(tau)


def twisted_initial_columns(indices: Iterable[int], oc: OCPartition) -> tuple[int, ...]:
    """Columnas del término inicial de D_S respecto de ⋖^τ."""
    return greedy_initial_columns(indices, twisted_order(oc))


def is_twisted_triangular(oc: OCPartition) -> bool:
    """Todo in_{⋖^τ} D_S usa solo variables z_{i,j} con j ≥ i."""
    n = oc.n
    for k in range(1, n):
        for subset in k_subsets(n, k):
            columns = twisted_initial_columns(subset.indices, oc)
            if any(j < row for row, j in enumerate(columns, start=1)):
                return False
    return True
