"""Pipe dreams: w_M, tuberías, r(i,j), σ_i y τ."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.pipe_dreams import (
    r_value,
    sigma_by_pipe,
    sigma_tau,
    trace_pipe,
    w_of_mask,
    w_of_subset,
    w_via_crossings,
)
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.poset_element import canonical_elements

MARKED_SET = [(1, 1), (2, 2), (1, 2), (2, 3), (1, 4)]


def subsets_of_p(n: int):
    elements = canonical_elements(n)
    return st.sets(st.sampled_from(elements))


# ─── w_M ────────────────────────────────────────────────────────────────


def test_w_of_marked_set():
    assert w_of_subset(MARKED_SET, 4) == Permutation((4, 3, 1, 2))


def test_w_of_empty_and_full():
    assert w_of_subset([], 4) == Permutation.identity(4)
    assert w_of_subset(canonical_elements(4), 4) == Permutation.longest(4)


def test_diagonal_elements_do_not_change_w():
    assert w_of_subset([(1, 1), (3, 3)], 4) == Permutation.identity(4)


def test_w_rejects_elements_outside_p():
    with pytest.raises(InvalidInputError):
        w_of_subset([(3, 2)], 4)


def test_w_of_mask_matches_w_of_subset():
    elements = canonical_elements(3)
    for mask in range(1 << len(elements)):
        chosen = [p for b, p in enumerate(elements) if mask >> b & 1]
        assert w_of_mask(mask, 3) == w_of_subset(chosen, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_crossing_characterization_exhaustive(n):
    elements = canonical_elements(n)
    for size in range(len(elements) + 1):
        for chosen in itertools.combinations(elements, size):
            assert w_via_crossings(chosen, n) == w_of_subset(chosen, n)


# ─── Tuberías ───────────────────────────────────────────────────────────


def test_first_pipe_of_marked_set_exits_at_four():
    path = trace_pipe(MARKED_SET, 4, 1)
    assert path.exit_value == 4
    assert path.elements[0] == (1, 4)
    assert path.elements[-1] == (1, 4)


def test_marked_set_exits():
    assert [trace_pipe(MARKED_SET, 4, i).exit_value for i in range(1, 5)] == [4, 3, 1, 2]


@given(subsets_of_p(4))
def test_pipe_exits_compose_w(chosen):
    w = w_of_subset(chosen, 4)
    assert tuple(trace_pipe(chosen, 4, i).exit_value for i in range(1, 5)) == w.images


def test_trace_pipe_rejects_bad_row():
    with pytest.raises(InvalidInputError):
        trace_pipe([], 4, 5)


# ─── r(i,j), σ_i y τ ────────────────────────────────────────────────────


@pytest.mark.parametrize("j,expected", [(4, 2), (3, 3), (2, 1), (1, 4)])
def test_r_row_two_of_example(example_oc, j, expected):
    assert r_value(example_oc, 2, j) == expected


def test_r_is_identity_for_empty_order():
    oc = OCPartition.empty(4)
    for i in range(1, 5):
        for j in range(i, 5):
            assert r_value(oc, i, j) == j


def test_sigmas_of_example(example_oc):
    sigmas, tau = sigma_tau(example_oc)
    assert sigmas[0] == Permutation((1, 2, 3, 4))
    assert sigmas[1] == Permutation((2, 4, 3, 1))
    assert sigmas[2] == Permutation((3, 4, 2, 1))
    assert tau == Permutation((3, 4, 2, 1))


def test_r_value_out_of_range(example_oc):
    with pytest.raises(InvalidInputError):
        r_value(example_oc, 0, 2)


def test_sigma_by_pipe_matches_sigma_tau():
    for oc in OCPartition.all_partitions(4):
        sigmas, _ = sigma_tau(oc)
        for i in range(1, 5):
            for j in range(1, 5):
                assert sigma_by_pipe(oc, i, j) == sigmas[i - 1](j)
