"""
PipeDegen – Núcleos tóricos en grado 2 y censo de ideales iniciales
====================================================================
Huellas de ker φ en multigrado ω_a + ω_b para mapas monomiales dados
sobre generadores, y el censo de huellas distintas y de 𝒮_n-órbitas.

DECISIONES DE DISEÑO:
    - Un mapa monomial se da como {generador: (coeficiente ±1, monomio)}.
      Los productos de pares de generadores se agrupan por imagen; cada
      fibra con ≥ 2 pares genera los binomios c_p·X_p − c_q·X_q del núcleo.
    - Una fibra se normaliza multiplicando por el coeficiente de su par
      mínimo; la huella es el frozenset de fibras normalizadas etiquetadas
      con (a, b). Es una representación canónica del núcleo en grado 2.
    - Los ideales I^{O,C}_d están generados en grado 2, así que la huella
      de grado 2 distingue ideales en el censo.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import (
    k_subsets,
    minor_initial_term,
    phi_oc,
    psi_map,
)
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.services.monomial_order import variable_order
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.toric_kernel")

GeneratorImages = Mapping[Hashable, tuple[int, Monomial]]
Fiber = tuple[tuple[tuple[Hashable, Hashable], int], ...]
KernelFingerprint = frozenset[tuple[int, int, Fiber]]

CENSUS_ASSUMPTION = "ideales distinguidos por sus binomios de grado 2"


def _normalize_fiber(entries: Iterable[tuple[tuple[Hashable, Hashable], int]]) -> Fiber:
    ordered = sorted(entries)
    pivot = ordered[0][1]
    return tuple((pair, coef * pivot) for pair, coef in ordered)


def toric_kernel_deg2(
    images_a: GeneratorImages,
    images_b: GeneratorImages,
    same_group: bool = False,
) -> frozenset[Fiber]:
    """
    Fibras de ker φ en el grado de un generador de `images_a` por uno de
    `images_b`. Con same_group=True se toman pares no ordenados con repetición.
    """
    fibers: dict[Monomial, list[tuple[tuple[Hashable, Hashable], int]]] = {}
    labels_a = sorted(images_a)
    labels_b = sorted(images_b)
    if same_group:
        pairs = itertools.combinations_with_replacement(labels_a, 2)
    else:
        pairs = itertools.product(labels_a, labels_b)
    for x, y in pairs:
        coef_x, mono_x = images_a[x]
        coef_y, mono_y = (images_a if same_group else images_b)[y]
        fibers.setdefault(mono_x * mono_y, []).append(((x, y), coef_x * coef_y))
    return frozenset(_normalize_fiber(entries) for entries in fibers.values() if len(entries) >= 2)


def degree2_fingerprint(
    images_by_k: Mapping[int, GeneratorImages],
    signature: Sequence[int],
) -> KernelFingerprint:
    """Unión de las fibras en todos los multigrados ω_a + ω_b con a ≤ b en la firma."""
    result = set()
    for a, b in itertools.combinations_with_replacement(sorted(signature), 2):
        for fiber in toric_kernel_deg2(images_by_k[a], images_by_k[b], same_group=a == b):
            result.add((a, b, fiber))
    return frozenset(result)


# ─── Imágenes de generadores ────────────────────────────────────────────


def initial_images(oc: OCPartition, signature: Sequence[int]) -> dict[int, dict[PlueckerVariable, tuple[int, Monomial]]]:
    """φ_⋖: X_S ↦ in_⋖ D_S (coeficiente, monomio)."""
    order = variable_order(oc)
    return {
        k: {S: minor_initial_term(S.indices, order)[::-1] for S in k_subsets(oc.n, k)}
        for k in signature
    }


def transported_images(oc: OCPartition, signature: Sequence[int]) -> dict[int, dict[PlueckerVariable, tuple[int, Monomial]]]:
    """φ_{O,C} ∘ ψ⁻¹: X_S ↦ signo(ψ) · z^{x_{O,C}(J)} con ψ(X_J) = ±X_S."""
    poset = gt_poset(oc.n)
    result: dict[int, dict[PlueckerVariable, tuple[int, Monomial]]] = {}
    for k in signature:
        group = {}
        for J in poset.ideals(k):
            variable, sign = psi_map(J, oc)
            if variable in group:
                raise InvalidInputError(
                    f"ψ no es inyectiva en 𝒥_{k} para {oc.label()}", field="psi", value=variable.label()
                )
            group[variable] = (sign, phi_oc(J, oc))
        result[k] = group
    return result


def _check_signature(n: int, signature: Sequence[int]) -> tuple[int, ...]:
    sig = tuple(sorted(set(signature)))
    if not sig or any(not 1 <= k <= n - 1 for k in sig):
        raise InvalidInputError(f"firma inválida {signature} para n={n}", field="signature", value=signature)
    return sig


def initial_ideal_fingerprint(oc: OCPartition, signature: Sequence[int]) -> KernelFingerprint:
    """Huella de ψ(I^{O,C}_d) en grado 2."""
    sig = _check_signature(oc.n, signature)
    return degree2_fingerprint(transported_images(oc, sig), sig)


def kernels_agree(oc: OCPartition, signature: Sequence[int]) -> bool:
    """ψ(ker φ_{O,C}) = ker φ_⋖ en todos los grados ω_a + ω_b."""
    sig = _check_signature(oc.n, signature)
    return degree2_fingerprint(transported_images(oc, sig), sig) == degree2_fingerprint(
        initial_images(oc, sig), sig
    )


# ─── Acción de 𝒮_n y censo ──────────────────────────────────────────────


def _act(w: Permutation, variable: PlueckerVariable) -> tuple[PlueckerVariable, int]:
    return PlueckerVariable.from_unsorted(w(i) for i in variable.indices)


def act_on_fingerprint(w: Permutation, fingerprint: KernelFingerprint) -> KernelFingerprint:
    """w(X_{i_1…i_k}) = X_{w(i_1)…w(i_k)}, renormalizando signos y fibras."""
    moved = set()
    for a, b, fiber in fingerprint:
        entries = []
        for (x, y), coef in fiber:
            wx, sx = _act(w, x)
            wy, sy = _act(w, y)
            if a == b and wy < wx:
                wx, wy = wy, wx
            entries.append(((wx, wy), coef * sx * sy))
        moved.add((a, b, _normalize_fiber(entries)))
    return frozenset(moved)


def serialize_fingerprint(fingerprint: KernelFingerprint) -> tuple:
    """Serialización canónica comparable."""
    return tuple(
        sorted(
            (a, b, tuple((x.indices, y.indices, coef) for (x, y), coef in fiber))
            for a, b, fiber in fingerprint
        )
    )


def orbit_members(fingerprint: KernelFingerprint, n: int) -> frozenset[tuple]:
    """Serializaciones de todos los w(fingerprint), w ∈ 𝒮_n."""
    return frozenset(
        serialize_fingerprint(act_on_fingerprint(Permutation(images), fingerprint))
        for images in itertools.permutations(range(1, n + 1))
    )


def orbit_representative(fingerprint: KernelFingerprint, n: int) -> tuple:
    return min(orbit_members(fingerprint, n))


@dataclass(slots=True)
class CensusResult:
    """
    distinct: ideales de la unión de las 𝒮_n-órbitas de las huellas alcanzadas.
    reached:  huellas alcanzadas directamente por las particiones recorridas.
    """

    n: int
    signature: tuple[int, ...]
    partitions: int
    distinct: int
    orbits: int
    reached: int
    classes: dict[str, list[str]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "signature": list(self.signature),
            "partitions": self.partitions,
            "distinct_ideals": self.distinct,
            "reached_ideals": self.reached,
            "orbits": self.orbits,
            "classes": self.classes,
            "assumption": CENSUS_ASSUMPTION,
        }


def orbit_census(
    n: int,
    signature: Sequence[int],
    partitions: Iterable[OCPartition] | None = None,
    deadline: Deadline | None = None,
) -> CensusResult:
    """
    Censo de los ideales iniciales ψ(I^{O,C}_d) y sus 𝒮_n-órbitas.

    Cada huella alcanzada aporta su órbita completa bajo la acción
    w(X_{i_1…i_k}) = X_{w(i_1)…w(i_k)}; `distinct` es el tamaño de la unión.

    Raises:
        BudgetExceededError: con el conteo parcial en `partial`.
    """
    sig = _check_signature(n, signature)
    chosen = list(partitions) if partitions is not None else list(OCPartition.all_partitions(n))
    seen: dict[KernelFingerprint, list[str]] = {}
    for done, oc in enumerate(chosen):
        if deadline is not None:
            deadline.check(
                "orbit_census",
                partial={"partitions_done": done, "distinct_so_far": len(seen)},
            )
        seen.setdefault(initial_ideal_fingerprint(oc, sig), []).append(oc.to_hex())

    grouped: dict[tuple, list[str]] = {}
    union: set[tuple] = set()
    for fp, members in seen.items():
        orbit = orbit_members(fp, n)
        union |= orbit
        grouped.setdefault(min(orbit), []).extend(members)
    orbits = len(grouped)
    logger.info(
        f"Censo n={n} d={sig}: {len(union)} ideales distintos ({len(seen)} alcanzados), {orbits} órbitas"
    )
    return CensusResult(
        n=n,
        signature=sig,
        partitions=len(chosen),
        distinct=len(union),
        orbits=orbits,
        reached=len(seen),
        classes={f"orbit_{idx}": sorted(grouped[rep]) for idx, rep in enumerate(sorted(grouped))},
    )
