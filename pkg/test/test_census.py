"""Censo de ideales iniciales tóricos y 𝒮_n-órbitas."""

from __future__ import annotations

import itertools

import pytest

from pipedegen.domain.exceptions.domain_errors import BudgetExceededError, InvalidInputError
from pipedegen.domain.services.toric_kernel import (
    act_on_fingerprint,
    initial_ideal_fingerprint,
    orbit_census,
    orbit_members,
    serialize_fingerprint,
    toric_kernel_deg2,
)
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.polynomial import Monomial


@pytest.mark.parametrize("n,signature,distinct,orbits", [(3, (1, 2), 3, 1), (4, (1, 2, 3), 24, 2)])
def test_census_counts(n, signature, distinct, orbits):
    result = orbit_census(n, signature)
    assert result.partitions == 2 ** (n * (n - 1) // 2)
    assert result.distinct == distinct
    assert result.orbits == orbits
    assert result.reached <= result.distinct
    assert sum(len(members) for members in result.classes.values()) == result.partitions


def test_census_serializes():
    data = orbit_census(3, (1, 2)).to_dict()
    assert data["distinct_ideals"] == 3
    assert data["orbits"] == 1
    assert data["reached_ideals"] <= data["distinct_ideals"]
    assert data["signature"] == [1, 2]


def test_identity_fixes_fingerprint(example_oc):
    fp = initial_ideal_fingerprint(example_oc, (1, 2, 3))
    moved = act_on_fingerprint(Permutation.identity(4), fp)
    assert serialize_fingerprint(moved) == serialize_fingerprint(fp)


def test_toric_kernel_single_fiber():
    x, y = Monomial.from_variables(["x"]), Monomial.from_variables(["y"])
    images = {"a": (1, x), "b": (1, y), "c": (1, x * y), "d": (-1, Monomial.one())}
    fibers = toric_kernel_deg2(images, images, same_group=True)
    assert fibers == frozenset({((("a", "b"), 1), (("c", "d"), -1))})


def test_census_rejects_bad_signature():
    with pytest.raises(InvalidInputError):
        orbit_census(3, (3,))


def test_census_budget_exhaustion_reports_progress():
    expired = Deadline(budget_ms=0, started_at=0.0)
    with pytest.raises(BudgetExceededError) as info:
        orbit_census(3, (1, 2), list(OCPartition.all_partitions(3)), expired)
    assert info.value.partial == {"partitions_done": 0, "distinct_so_far": 0}


def test_single_partition_census(example_oc):
    result = orbit_census(4, (1, 2, 3), [example_oc])
    assert (result.reached, result.orbits) == (1, 1)
    fp = initial_ideal_fingerprint(example_oc, (1, 2, 3))
    relabeled = {
        serialize_fingerprint(act_on_fingerprint(Permutation(images), fp))
        for images in itertools.permutations(range(1, 5))
    }
    assert result.distinct == len(relabeled)
    assert result.classes == {"orbit_0": [example_oc.to_hex()]}


def test_distinct_ideals_are_the_union_of_orbits():
    result = orbit_census(3, (1, 2))
    reached = {initial_ideal_fingerprint(oc, (1, 2)) for oc in OCPartition.all_partitions(3)}
    union = set().union(*(orbit_members(fp, 3) for fp in reached))
    assert result.reached == len(reached)
    assert result.distinct == len(union) == 3


def test_orbit_members_contains_the_fingerprint(example_oc):
    fp = initial_ideal_fingerprint(example_oc, (1, 2, 3))
    assert serialize_fingerprint(fp) in orbit_members(fp, 4)
