"""Ideal monomial I^M_d, cadenas estándar, relaciones de Hibi y tuplas PBW."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.mcop_polytope import weyl_dim
from pipedegen.domain.services.standard_monomials import (
    fflv_pbw_tuple,
    hibi_relations,
    hibi_relations_in_kernel,
    ideals_of_signature,
    is_pbw_tuple,
    standard_monomial_ideal,
    standard_monomials,
    transport_pairs,
)
from pipedegen.domain.value_objects.weight import Weight


def test_ideals_of_signature_sizes():
    assert len(ideals_of_signature((1, 2, 3), 4)) == 4 + 6 + 4


def test_ideals_of_signature_rejects_out_of_range():
    with pytest.raises(InvalidInputError):
        ideals_of_signature((0, 1), 4)


def test_single_incomparable_pair_at_n3():
    assert len(standard_monomial_ideal((1, 2), 3)) == 1
    assert standard_monomial_ideal((1,), 3) == ()


def test_generators_are_incomparable():
    for J1, J2 in standard_monomial_ideal((1, 2, 3), 4):
        assert not J1.issubset(J2) and not J2.issubset(J1)


@pytest.mark.parametrize("a", [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (2, 0, 1), (0, 2, 0)])
def test_chain_count_is_weyl_dimension(a):
    lam = Weight(a)
    chains = standard_monomials(lam)
    assert len(chains) == weyl_dim(lam)
    for chain in chains:
        assert tuple(J.k for J in chain) == lam.factors
        assert all(x.issubset(y) for x, y in zip(chain, chain[1:]))


def test_hibi_relations_shape():
    for (J1, J2), (union, meet) in hibi_relations((1, 2, 3), 4):
        assert J1.issubset(union) and J2.issubset(union)
        assert meet.issubset(J1) and meet.issubset(J2)


@pytest.mark.parametrize("n,signature", [(3, (1, 2)), (4, (1, 2, 3)), (4, (2,)), (5, (2, 3))])
def test_hibi_relations_vanish_under_gt_map(n, signature):
    assert hibi_relations_in_kernel(signature, n)


def test_transport_pairs_orders_and_signs(example_oc):
    for s, t, sign in transport_pairs(standard_monomial_ideal((1, 2, 3), 4), example_oc):
        assert s <= t
        assert sign in (1, -1)


# ─── Tuplas PBW ─────────────────────────────────────────────────────────


def test_pbw_tuple_example():
    assert fflv_pbw_tuple((2, 4, 5)) == (5, 2, 4)
    assert is_pbw_tuple((5, 2, 4))
    assert not is_pbw_tuple((2, 5, 4))


def test_pbw_tuple_rejects_repeats():
    with pytest.raises(InvalidInputError):
        fflv_pbw_tuple((2, 2))


@given(st.integers(2, 7).flatmap(lambda n: st.sets(st.integers(1, n), min_size=1, max_size=n - 1)))
def test_pbw_tuple_is_a_reordering(subset):
    t = fflv_pbw_tuple(subset)
    assert sorted(t) == sorted(subset)
    assert is_pbw_tuple(t)


def test_pbw_tuples_count_matches_ideals():
    n = 5
    for k in range(1, n):
        tuples = {fflv_pbw_tuple(S) for S in itertools.combinations(range(1, n + 1), k)}
        assert len(tuples) == len(ideals_of_signature((k,), n))
