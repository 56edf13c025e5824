"""Determinante, rango y eliminación incremental libres de fracciones."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from pipedegen.domain.services.exact_linalg import (
    FractionFreeEliminator,
    bareiss_determinant,
    bareiss_rank,
    integer_row,
)

entries = st.integers(-6, 6)


def square(size: int):
    return st.lists(st.lists(entries, min_size=size, max_size=size), min_size=size, max_size=size)


@given(st.integers(1, 5).flatmap(square))
def test_determinant_matches_sympy(matrix):
    assert bareiss_determinant(matrix) == sympy.Matrix(matrix).det()


@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_rank_matches_sympy(height, width, data):
    matrix = data.draw(st.lists(st.lists(entries, min_size=width, max_size=width), min_size=height, max_size=height))
    assert bareiss_rank(matrix) == sympy.Matrix(matrix).rank()


def test_determinant_edge_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        bareiss_determinant([[1, 2]])


def test_integer_row_clears_denominators():
    assert integer_row({"a": Fraction(1, 2), "b": Fraction(-3, 4)}) == {"a": 2, "b": -3}
    assert integer_row({"a": 4, "b": 6, "c": 0}) == {"a": 2, "b": 3}


def test_eliminator_flags_first_dependent_vector():
    eliminator = FractionFreeEliminator()
    assert eliminator.add({"x": 1, "y": 2})
    assert eliminator.add({"y": 1, "z": -1})
    assert not eliminator.add({"x": 2, "y": 5, "z": -1})
    assert eliminator.add({"z": Fraction(1, 3)})
    assert eliminator.rank == 3


@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=6))
def test_eliminator_rank_matches_sympy(rows):
    eliminator = FractionFreeEliminator()
    for row in rows:
        eliminator.add({col: v for col, v in enumerate(row)})
    assert eliminator.rank == sympy.Matrix(rows).rank()
