"""Acción de f_{i,j}, vectores f^c u y certificados de base monomial."""

from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.degeneration import twisted_initial_columns
from pipedegen.domain.services.mcop_polytope import weyl_dim
from pipedegen.domain.services.representation import (
    act_f,
    apply_pbw,
    leading_grade_check,
    monomial_basis_check,
    monomial_basis_points,
    pbw_exponent_of,
    tensor_weight,
)
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.rep_vector import PBWExponent, RepVector
from pipedegen.domain.value_objects.weight import Weight

ALL_N3 = list(OCPartition.all_partitions(3))
ALL_N4 = list(OCPartition.all_partitions(4))


def vector(*terms) -> RepVector:
    return RepVector.from_terms(terms)


# ─── f_{i,j} ────────────────────────────────────────────────────────────


def test_replacement_with_sign():
    assert act_f(1, 3, vector((((1, 2),), 1))) == vector((((2, 3),), -1))


def test_zero_when_index_absent_or_target_present():
    assert act_f(1, 3, vector((((2, 4),), 1))).is_zero
    assert act_f(1, 2, vector((((1, 2),), 1))).is_zero


def test_leibniz_on_two_factors():
    result = act_f(1, 2, vector((((1,), (1,)), 1)))
    assert result == vector((((2,), (1,)), 1), (((1,), (2,)), 1))


def test_act_f_requires_i_below_j():
    with pytest.raises(InvalidInputError):
        act_f(3, 1, vector((((1, 3),), 1)))


# ─── f^c u ──────────────────────────────────────────────────────────────


def test_zero_exponent_gives_highest_weight_vector():
    lam = Weight((1, 1, 0))
    assert apply_pbw(PBWExponent.from_mapping(4, {}), lam) == RepVector.highest_weight(lam.factors)


def test_word_order_applies_rightmost_first():
    # f_{1,2} f_{2,3} e_1 = 0, en cambio f_{2,3} f_{1,2} e_1 = e_3
    c = PBWExponent.from_mapping(3, {(1, 2): 1, (2, 3): 1})
    assert apply_pbw(c, Weight((1, 0))).is_zero


@pytest.mark.parametrize("oc", ALL_N3, ids=lambda oc: oc.to_hex())
@pytest.mark.parametrize("columns", [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)])
def test_fundamental_initial_exponent_reaches_basis_vector(oc, columns):
    k = len(columns)
    grid = {}
    for row, col in enumerate(twisted_initial_columns(columns, oc), start=1):
        if row != col:
            grid[(row, col)] = grid.get((row, col), 0) + 1
    result = apply_pbw(PBWExponent.from_mapping(3, grid), Weight.fundamental(3, k))
    assert len(result) == 1
    ((key, coef),) = list(result)
    assert key == (tuple(sorted(columns)),)
    assert abs(coef) == 1


@given(st.sampled_from(ALL_N4), st.sampled_from([(1, 1, 0), (0, 1, 1), (2, 0, 0)]))
@settings(max_examples=15)
def test_weight_bookkeeping(oc, a):
    lam = Weight(a)
    top = [0] * 4
    for key, _ in RepVector.highest_weight(lam.factors):
        top = list(tensor_weight(key, 4))
    for point in monomial_basis_points(oc, lam):
        c = pbw_exponent_of(point, 4)
        expected = list(top)
        for (i, j), power in c.items():
            expected[i - 1] -= power
            expected[j - 1] += power
        for key, _ in apply_pbw(c, lam):
            assert list(tensor_weight(key, 4)) == expected


# ─── Certificados ───────────────────────────────────────────────────────


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fundamental_basis_rank(example_oc, k):
    cert = monomial_basis_check(example_oc, Weight.fundamental(4, k))
    assert cert.passed
    assert cert.rank == comb(4, k)


@pytest.mark.parametrize("a", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_basis_over_all_partitions_n3(a):
    lam = Weight(a)
    for oc in ALL_N3:
        cert = monomial_basis_check(oc, lam)
        assert cert.passed, cert.to_dict()
        assert cert.rank == weyl_dim(lam)


BASIS_WEIGHTS_N4 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]


@pytest.mark.slow
@pytest.mark.parametrize("a", BASIS_WEIGHTS_N4)
@pytest.mark.parametrize("oc", ALL_N4, ids=lambda oc: oc.to_hex())
def test_basis_over_all_partitions_n4(oc, a):
    lam = Weight(a)
    cert = monomial_basis_check(oc, lam)
    assert cert.passed, cert.to_dict()
    assert cert.rank == weyl_dim(lam)
    assert cert.to_dict()["dependent_point"] is None


@pytest.mark.parametrize("a", [(1, 1), (2, 1), (0, 2)])
def test_leading_grade_over_all_partitions_n3(a):
    for oc in ALL_N3:
        check = leading_grade_check(oc, Weight(a))
        assert check.passed, check.to_dict()
        assert check.checked == weyl_dim(Weight(a))
