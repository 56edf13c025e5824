"""
PipeDegen – Ideal monomial I^M_d y monomios estándar
=====================================================
I^M_d está generado por los X_{J_1}X_{J_2} con J_1, J_2 incomparables;
los monomios fuera de I^M_d son las cadenas J_1 ⊆ … ⊆ J_m. También las
relaciones de Hibi del retículo 𝒥_d y las tuplas PBW del caso O = ∅.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import phi_oc, psi_map
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.order_ideal import OrderIdeal
from pipedegen.domain.value_objects.polynomial import PlueckerVariable
from pipedegen.domain.value_objects.weight import Weight

IdealPair = tuple[OrderIdeal, OrderIdeal]


def ideals_of_signature(signature: Iterable[int], n: int) -> tuple[OrderIdeal, ...]:
    """𝒥_d = ∪_{k ∈ d} 𝒥_k, en el orden de enumeración."""
    poset = gt_poset(n)
    ks = sorted(set(signature))
    if any(not 1 <= k <= n - 1 for k in ks):
        raise InvalidInputError(f"firma inválida {tuple(ks)} para n={n}", field="signature", value=tuple(ks))
    return tuple(J for k in ks for J in poset.ideals(k))


def standard_monomial_ideal(signature: Iterable[int], n: int) -> tuple[IdealPair, ...]:
    """Generadores X_{J_1}X_{J_2} de I^M_d: pares incomparables, J_1 < J_2 en el orden de bitmask."""
    ideals = ideals_of_signature(signature, n)
    return tuple(
        (J1, J2)
        for J1, J2 in itertools.combinations(sorted(ideals), 2)
        if not J1.issubset(J2) and not J2.issubset(J1)
    )


def transport_pairs(
    pairs: Iterable[IdealPair], oc: OCPartition
) -> tuple[tuple[PlueckerVariable, PlueckerVariable, int], ...]:
    """ψ(X_{J_1}X_{J_2}) = ±X_S X_T; devuelve (S, T, signo) con S ≤ T."""
    result = []
    for J1, J2 in pairs:
        s, sign_s = psi_map(J1, oc)
        t, sign_t = psi_map(J2, oc)
        if t < s:
            s, t = t, s
        result.append((s, t, sign_s * sign_t))
    return tuple(result)


def standard_monomials(lam: Weight, deadline: Deadline | None = None) -> tuple[tuple[OrderIdeal, ...], ...]:
    """Cadenas J_1 ⊆ … ⊆ J_m con |J_t ∩ A| recorriendo los factores de λ."""
    poset = gt_poset(lam.n)
    factors = lam.factors
    chains: list[tuple[OrderIdeal, ...]] = []

    def extend(prefix: tuple[OrderIdeal, ...]) -> None:
        if deadline is not None:
            deadline.check("standard_monomials", partial={"chains": len(chains)})
        if len(prefix) == len(factors):
            chains.append(prefix)
            return
        for J in poset.ideals(factors[len(prefix)]):
            if not prefix or prefix[-1].issubset(J):
                extend(prefix + (J,))

    extend(())
    return tuple(chains)


# ─── Relaciones de Hibi ─────────────────────────────────────────────────


def hibi_relations(signature: Sequence[int], n: int) -> tuple[tuple[IdealPair, IdealPair], ...]:
    """Binomios X_{J_1}X_{J_2} − X_{J_1∪J_2}X_{J_1∩J_2} para J_1, J_2 incomparables."""
    return tuple(
        ((J1, J2), (J1.union(J2), J1.intersection(J2)))
        for J1, J2 in standard_monomial_ideal(signature, n)
    )


def hibi_relations_in_kernel(signature: Sequence[int], n: int) -> bool:
    """Toda relación de Hibi se anula bajo φ_{P∖A,∅}."""
    gt = OCPartition.full(n)
    return all(
        phi_oc(a, gt) * phi_oc(b, gt) == phi_oc(c, gt) * phi_oc(d, gt)
        for (a, b), (c, d) in hibi_relations(signature, n)
    )


# ─── Tuplas PBW ─────────────────────────────────────────────────────────


def fflv_pbw_tuple(indices: Iterable[int]) -> tuple[int, ...]:
    """
    Reordenación (α_1, …, α_k) de {i_1, …, i_k}: α_j = j si α_j ≤ k y los
    α_j > k aparecen en orden decreciente.
    """
    given = tuple(indices)
    items = sorted(set(given))
    k = len(items)
    if k != len(given):
        raise InvalidInputError(f"índices repetidos: {given}", field="indices", value=given)
    slots: list[int | None] = [None] * k
    for value in items:
        if value <= k:
            slots[value - 1] = value
    large = iter(sorted((v for v in items if v > k), reverse=True))
    return tuple(v if v is not None else next(large) for v in slots)


def is_pbw_tuple(columns: Sequence[int]) -> bool:
    k = len(columns)
    large = [v for v in columns if v > k]
    return all(v == pos for pos, v in enumerate(columns, start=1) if v <= k) and large == sorted(large, reverse=True)
