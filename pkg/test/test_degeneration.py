"""Degeneración tórica: ψ, φ_{O,C}, θ, términos iniciales y núcleos de grado 2."""

from __future__ import annotations

import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import (
    check_generator,
    check_generators,
    is_twisted_triangular,
    plucker_determinant,
    psi_is_bijective,
    psi_map,
    sagbi_count_check,
    theta_monomial,
)
from pipedegen.domain.services.gt_poset import gt_poset, ideal_generated_by
from pipedegen.domain.services.pipe_dreams import r_value
from pipedegen.domain.services.toric_kernel import initial_ideal_fingerprint, kernels_agree
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable, ZVariable
from pipedegen.domain.value_objects.weight import Weight


def partitions_with(n, inside, outside):
    return [
        oc
        for oc in OCPartition.all_partitions(n)
        if all(oc.in_order(p) for p in inside) and not any(oc.in_order(p) for p in outside)
    ]


# ─── Menores ────────────────────────────────────────────────────────────


@pytest.mark.parametrize("indices", [(1, 3), (2, 3, 4), (4,)])
def test_plucker_determinant_matches_sympy(indices):
    n = 4
    k = len(indices)
    symbols = {(i, j): sympy.Symbol(f"z_{i}_{j}") for i in range(1, n + 1) for j in range(1, n + 1)}
    expected = sympy.expand(sympy.Matrix(k, k, lambda r, c: symbols[(r + 1, indices[c])]).det())
    ours = sum(
        coef * sympy.Mul(*(symbols[(v.i, v.j)] ** e for v, e in mono.exps))
        for mono, coef in plucker_determinant(indices, n)
    )
    assert sympy.expand(ours - expected) == 0


def test_unsorted_columns_change_sign():
    assert plucker_determinant((2, 1), 3) == -plucker_determinant((1, 2), 3)


def test_plucker_determinant_rejects_repeated_indices():
    with pytest.raises(InvalidInputError):
        plucker_determinant((1, 1), 3)


# ─── ψ ──────────────────────────────────────────────────────────────────


def test_psi_of_example_ideal_for_all_compatible_partitions():
    J = ideal_generated_by([(1, 4), (2, 3)], 4)
    compatible = partitions_with(4, inside=[(1, 2)], outside=[(1, 3)])
    assert len(compatible) == 16
    for oc in compatible:
        assert psi_map(J, oc) == (PlueckerVariable((3, 4)), -1)


@pytest.mark.parametrize("n", [3, 4])
def test_psi_is_bijective_on_every_group(n):
    for oc in OCPartition.all_partitions(n):
        assert all(psi_is_bijective(oc, k) for k in range(1, n))


def test_psi_undefined_for_full_group():
    J = gt_poset(3).ideals(3)[0]
    with pytest.raises(InvalidInputError):
        psi_map(J, OCPartition.empty(3))


# ─── θ ──────────────────────────────────────────────────────────────────


def test_theta_on_diagonal(example_oc):
    for i in range(1, 5):
        image = theta_monomial(Monomial.from_variables([ZVariable(i, i)]), example_oc)
        assert image == Monomial.from_variables([ZVariable(i, r_value(example_oc, i, i))])


# ─── Generadores: término inicial y cuadrado conmutativo ────────────────


@pytest.mark.parametrize("n", [3, 4])
def test_every_generator_passes_exhaustively(n):
    signature = tuple(range(1, n))
    for oc in OCPartition.all_partitions(n):
        checks = check_generators(oc, signature)
        assert all(c.initial_matches for c in checks), oc.label()
        assert all(c.square_commutes for c in checks), oc.label()
        assert all(c.initial_coefficient in (1, -1) for c in checks)


@given(st.integers(min_value=0, max_value=(1 << 10) - 1))
def test_generators_pass_on_sampled_n5(mask):
    oc = OCPartition(5, mask)
    J = gt_poset(5).ideals(2)[mask % 10]
    assert check_generator(J, oc).passed


def test_generator_check_serializes(example_oc):
    J = ideal_generated_by([(1, 4), (2, 3)], 4)
    data = check_generator(J, example_oc).to_dict()
    assert data["psi"] == "X[3,4]"
    assert data["psi_sign"] == -1
    assert data["passed"] is True


# ─── Núcleos y sagbi ────────────────────────────────────────────────────


@pytest.mark.parametrize("n", [3, 4])
def test_degree_two_kernels_agree(n):
    for oc in OCPartition.all_partitions(n):
        assert kernels_agree(oc, tuple(range(1, n)))


def test_single_relation_at_n3_degenerates_to_binomial():
    fingerprint = initial_ideal_fingerprint(OCPartition.full(3), (1, 2))
    mixed = [fiber for a, b, fiber in fingerprint if (a, b) == (1, 2)]
    assert len(mixed) == 1
    assert len(mixed[0]) == 2


@pytest.mark.parametrize("a", [(1, 1, 1), (0, 1, 1), (2, 0, 0)])
def test_sagbi_counts(example_oc, a):
    cert = sagbi_count_check(example_oc, Weight(a))
    assert cert.homogeneous
    assert cert.count == cert.expected
    assert cert.passed


# ─── Triangularidad de ⋖^τ ──────────────────────────────────────────────


@pytest.mark.parametrize("n", [3, 4])
def test_twisted_order_is_triangular(n):
    for oc in OCPartition.all_partitions(n):
        assert is_twisted_triangular(oc), oc.label()
