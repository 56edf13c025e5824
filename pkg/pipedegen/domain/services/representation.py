"""
PipeDegen – Representaciones y bases monomiales
================================================
V_λ realizado como el span cíclico de u = e_{1..k_1} ⊗ … ⊗ e_{1..k_m}
dentro de U = Λ^{k_1}ℂ^n ⊗ … ⊗ Λ^{k_m}ℂ^n.

FÓRMULAS:
    f_{i,j} e_{i_1,…,i_k} = e_{…, j, …}  (i reemplazado por j; 0 si i ∉ S o j ∈ S)
    f^c = ∏_{i<j} f_{i,j}^{c_{i,j}} ordenado por i y luego j; se aplica
    primero el factor de la derecha.
    gr e_S = exponente de in_{⋖^τ} D_S, extendido aditivamente a tensores.

La independencia lineal se certifica con eliminación libre de fracciones.
"""

from __future__ import annotations

from dataclasses import dataclass

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import twisted_initial_columns, twisted_order
from pipedegen.domain.services.exact_linalg import FractionFreeEliminator
from pipedegen.domain.services.mcop_polytope import lattice_points, weyl_dim, xi_map
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.lattice_point import LatticePoint
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.polynomial import Monomial, ZVariable
from pipedegen.domain.value_objects.poset_element import canonical_elements, canonical_index
from pipedegen.domain.value_objects.rep_vector import PBWExponent, PureTensor, RepVector, wedge_normalize
from pipedegen.domain.value_objects.weight import Weight
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.representation")


def act_f(i: int, j: int, v: RepVector) -> RepVector:
    """f_{i,j} sobre U por la regla de Leibniz."""
    if not i < j:
        raise InvalidInputError(f"f_{{{i},{j}}} requiere i < j", field="ij", value=(i, j))
    terms = []
    for key, coef in v:
        for pos, factor in enumerate(key):
            if i not in factor or j in factor:
                continue
            normalized = wedge_normalize(j if x == i else x for x in factor)
            if normalized is None:
                continue
            new_factor, sign = normalized
            terms.append((key[:pos] + (new_factor,) + key[pos + 1:], coef * sign))
    return RepVector.from_terms(terms)


def apply_pbw(c: PBWExponent, lam: Weight, start: RepVector | None = None) -> RepVector:
    """f^c u: recorre los pares en orden canónico inverso."""
    if c.n != lam.n:
        raise InvalidInputError("exponente PBW y peso con n distintos", field="n", value=(c.n, lam.n))
    vector = start if start is not None else RepVector.highest_weight(lam.factors)
    for (i, j), power in reversed(list(c.items())):
        for _ in range(power):
            vector = act_f(i, j, vector)
            if vector.is_zero:
                return vector
    return vector


def tensor_weight(key: PureTensor, n: int) -> tuple[int, ...]:
    """Peso en coordenadas ε: cantidad de apariciones de cada índice."""
    counts = [0] * n
    for factor in key:
        for x in factor:
            counts[x - 1] += 1
    return tuple(counts)


def pbw_exponent_of(point: LatticePoint, n: int) -> PBWExponent:
    """Descarta las coordenadas diagonales de un punto de ℤ^P."""
    values = {tuple(p): point[b] for b, p in enumerate(canonical_elements(n)) if not p.is_diagonal}
    return PBWExponent.from_mapping(n, values)


# ─── Certificado de base ────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class BasisCertificate:
    weight: Weight
    points: int
    rank: int
    expected: int
    dependent_point: LatticePoint | None = None

    @property
    def passed(self) -> bool:
        return self.rank == self.expected == self.points and self.dependent_point is None

    def to_dict(self) -> dict:
        return {
            "weight": self.weight.to_dict(),
            "points": self.points,
            "rank": self.rank,
            "expected": self.expected,
            "dependent_point": list(self.dependent_point) if self.dependent_point is not None else None,
            "passed": self.passed,
        }


def monomial_basis_points(oc: OCPartition, lam: Weight) -> tuple[LatticePoint, ...]:
    """Π_λ ∩ ℤ^P = ξ(𝒪_{O,C}(λ) ∩ ℤ^P), ordenado."""
    xi = xi_map(oc)
    return tuple(sorted(xi.apply(x) for x in lattice_points(oc, lam)))


def monomial_basis_check(
    oc: OCPartition,
    lam: Weight,
    deadline: Deadline | None = None,
) -> BasisCertificate:
    """Independencia lineal exacta de {f^c u : c ∈ Π_λ ∩ ℤ^P}."""
    points = monomial_basis_points(oc, lam)
    eliminator = FractionFreeEliminator()
    dependent = None
    for done, point in enumerate(points):
        if deadline is not None:
            deadline.check("monomial_basis_check", partial={"points_done": done, "rank": eliminator.rank})
        vector = apply_pbw(pbw_exponent_of(point, oc.n), lam)
        if not eliminator.add(dict(vector.coords)):
            dependent = point
            logger.error(f"{oc.label()} λ={lam}: f^c u dependiente para c={point}")
            break
    return BasisCertificate(lam, len(points), eliminator.rank, weyl_dim(lam), dependent)


# ─── Graduación del argumento triangular ────────────────────────────────


def _grading(key: PureTensor, oc: OCPartition) -> LatticePoint:
    n = oc.n
    grade = [0] * len(canonical_elements(n))
    for factor in key:
        for row, col in enumerate(twisted_initial_columns(factor, oc), start=1):
            grade[canonical_index(row, col, n)] += 1
    return tuple(grade)


def _as_monomial(point: LatticePoint, n: int) -> Monomial:
    return Monomial.from_mapping({ZVariable(p.i, p.j): e for p, e in zip(canonical_elements(n), point)})


@dataclass(frozen=True, slots=True)
class GradeCheck:
    weight: Weight
    checked: int
    failures: tuple[LatticePoint, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "weight": self.weight.to_dict(),
            "checked": self.checked,
            "failures": [list(p) for p in self.failures],
            "passed": self.passed,
        }


def leading_grade_check(oc: OCPartition, lam: Weight) -> GradeCheck:
    """
    Para cada c ∈ Π_λ ∩ ℤ^P: la componente de grado c de f^c u es no nula y
    toda otra componente no nula tiene grado c' ⋗^τ c.
    """
    order = twisted_order(oc)
    failures = []
    points = monomial_basis_points(oc, lam)
    for point in points:
        vector = apply_pbw(pbw_exponent_of(point, oc.n), lam)
        grades = {_grading(key, oc) for key, _ in vector}
        own_key = order.key(_as_monomial(point, oc.n))
        leading_ok = point in grades and all(
            order.key(_as_monomial(grade, oc.n)) > own_key for grade in grades if grade != point
        )
        if not leading_ok:
            failures.append(point)
    return GradeCheck(lam, len(points), tuple(failures))
