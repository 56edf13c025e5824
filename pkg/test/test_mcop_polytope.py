"""Polítopos MCOP: puntos enteros, desigualdades, ξ y dimensión de Weyl."""

from __future__ import annotations

import itertools
import math

import pytest
import sympy
from hypothesis import given, strategies as st

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.mcop_polytope import (
    contains_ineq,
    fundamental_points,
    graded_degree,
    gt_pi_contains,
    integer_points_ineq,
    lattice_points,
    transformed_fundamental_points,
    weyl_dim,
    xi_map,
)
from pipedegen.domain.value_objects.lattice_point import sumset
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable, ZVariable
from pipedegen.domain.value_objects.poset_element import canonical_elements, canonical_index
from pipedegen.domain.value_objects.weight import Weight


def small_weights(n: int, max_size: int):
    for a in itertools.product(range(max_size + 1), repeat=n - 1):
        if 0 < sum(a) <= max_size:
            yield Weight(a)


# ─── Dimensión de Weyl ──────────────────────────────────────────────────


@pytest.mark.parametrize(
    "a,expected",
    [((1, 1, 1), 64), ((0, 1, 1), 20), ((1, 0, 0), 4), ((0, 1, 0), 6), ((1, 1), 8), ((2, 0), 6)],
)
def test_weyl_dim_values(a, expected):
    assert weyl_dim(Weight(a)) == expected


@pytest.mark.parametrize("n", [3, 4, 5])
def test_weyl_dim_of_fundamental_is_binomial(n):
    for k in range(1, n):
        assert weyl_dim(Weight.fundamental(n, k)) == math.comb(n, k)


# ─── Puntos enteros ─────────────────────────────────────────────────────


def test_fundamental_points_n2_chain():
    assert fundamental_points(OCPartition.empty(2), 1) == {(1, 0, 0), (1, 1, 0)}


@pytest.mark.parametrize("n", [3, 4])
def test_fundamental_points_count(n):
    for oc in OCPartition.all_partitions(n):
        for k in range(1, n):
            assert len(fundamental_points(oc, k)) == math.comb(n, k)


def test_rho_has_64_points_for_every_partition():
    rho = Weight((1, 1, 1))
    for oc in OCPartition.all_partitions(4):
        assert len(lattice_points(oc, rho)) == 64


def test_counts_match_weyl_dim_n3():
    for oc in OCPartition.all_partitions(3):
        for lam in small_weights(3, 3):
            assert len(lattice_points(oc, lam)) == weyl_dim(lam)


@given(st.integers(min_value=0, max_value=63), st.sampled_from([(1, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 1)]))
def test_counts_match_weyl_dim_n4(mask, a):
    lam = Weight(a)
    assert len(lattice_points(OCPartition(4, mask), lam)) == weyl_dim(lam)


def test_weight_rank_mismatch():
    with pytest.raises(InvalidInputError):
        lattice_points(OCPartition.empty(4), Weight((1, 1)))


# ─── Minkowski y modelo de desigualdades ────────────────────────────────


def test_minkowski_split_against_inequalities_n3():
    for oc in OCPartition.all_partitions(3):
        for lam, mu in itertools.product(small_weights(3, 2), repeat=2):
            if (lam + mu).size > 3:
                continue
            split = sumset(lattice_points(oc, lam), lattice_points(oc, mu))
            assert split == integer_points_ineq(oc, lam + mu)


@pytest.mark.parametrize("order_part", [[], [(1, 2), (1, 4), (2, 3)], "full"])
def test_inequality_model_agrees_n4(order_part):
    oc = OCPartition.full(4) if order_part == "full" else OCPartition.from_elements(4, order_part)
    lam = Weight((1, 1, 0))
    assert integer_points_ineq(oc, lam) == lattice_points(oc, lam)


def test_full_order_reduces_to_monotone_conditions():
    oc = OCPartition.full(3)
    lam = Weight((1, 1))
    elements = canonical_elements(3)
    for values in itertools.product(range(3), repeat=3):
        x = [0] * len(elements)
        x[canonical_index(1, 1, 3)] = lam.lam(1)
        x[canonical_index(2, 2, 3)] = lam.lam(2)
        x[canonical_index(3, 3, 3)] = lam.lam(3)
        x[canonical_index(1, 2, 3)], x[canonical_index(1, 3, 3)], x[canonical_index(2, 3, 3)] = values
        monotone = all(
            x[a] >= x[b]
            for a, p in enumerate(elements)
            for b, q in enumerate(elements)
            if p.i <= q.i and p.j <= q.j
        )
        assert contains_ineq(x, oc, lam) == monotone


# ─── ξ ──────────────────────────────────────────────────────────────────


def test_xi_is_unimodular_for_all_partitions():
    for oc in OCPartition.all_partitions(4):
        xi = xi_map(oc)
        assert xi.is_unimodular
        assert abs(sympy.Matrix(xi.matrix.tolist()).det()) == 1


def test_xi_keeps_off_diagonal_coordinates_for_empty_order():
    oc = OCPartition.empty(4)
    xi = xi_map(oc)
    for x in lattice_points(oc, Weight((1, 1, 1))):
        image = xi.apply(x)
        for b, p in enumerate(canonical_elements(4)):
            if not p.is_diagonal:
                assert image[b] == x[b]


def test_xi_of_fundamental_points():
    for oc in OCPartition.all_partitions(4):
        xi = xi_map(oc)
        for k in range(1, 4):
            moved = {xi.apply(x) for x in fundamental_points(oc, k)}
            assert moved == transformed_fundamental_points(oc, k)


def test_gelfand_tsetlin_image_satisfies_explicit_description():
    oc = OCPartition.full(4)
    xi = xi_map(oc)
    for lam in (Weight((1, 1, 1)), Weight((2, 0, 1))):
        assert all(gt_pi_contains(xi.apply(x), lam) for x in lattice_points(oc, lam))


# ─── Graduación ─────────────────────────────────────────────────────────


def test_graded_degree_of_pluecker_and_minor_term():
    assert graded_degree(PlueckerVariable((1, 3)), 4) == (0, 1, 0)
    term = Monomial.from_variables([ZVariable(1, 3), ZVariable(2, 1)])
    assert graded_degree(term, 4) == (0, 1, 0)
