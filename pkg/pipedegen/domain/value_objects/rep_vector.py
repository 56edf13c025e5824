"""
PipeDegen – Domain Value Objects: representaciones
===================================================
Vectores dispersos exactos en U = Λ^{k_1}ℂ^n ⊗ … ⊗ Λ^{k_m}ℂ^n.

- Un tensor puro es una tupla de subconjuntos ordenados (vectores
  e_{i_1<…<i_k} de cada factor).
- Los coeficientes son Fraction; en la práctica siempre son enteros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.value_objects.poset_element import off_diagonal_elements

ExteriorBasisVector = tuple[int, ...]
PureTensor = tuple[ExteriorBasisVector, ...]


def wedge_normalize(indices: Iterable[int]) -> tuple[ExteriorBasisVector, int] | None:
    """Ordena e_{i_1,…,i_k} con signo; None si hay índices repetidos (vector nulo)."""
    items = list(indices)
    if len(set(items)) != len(items):
        return None
    sign = 1
    # inserción: cada intercambio adyacente cambia el signo
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    return tuple(items), sign


@dataclass(frozen=True, slots=True)
class RepVector:
    coords: Mapping[PureTensor, Fraction] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[PureTensor, Fraction | int]]) -> "RepVector":
        acc: dict[PureTensor, Fraction] = {}
        for key, coef in terms:
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coef)
        return cls({k: v for k, v in acc.items() if v != 0})

    @classmethod
    def highest_weight(cls, factors: Iterable[int]) -> "RepVector":
        """u = e_{1..k_1} ⊗ … ⊗ e_{1..k_m}."""
        key = tuple(tuple(range(1, k + 1)) for k in factors)
        return cls({key: Fraction(1)})

    def __iter__(self) -> Iterator[tuple[PureTensor, Fraction]]:
        return iter(sorted(self.coords.items()))

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "RepVector") -> "RepVector":
        return RepVector.from_terms((*self.coords.items(), *other.coords.items()))

    def scale(self, factor: Fraction | int) -> "RepVector":
        return RepVector.from_terms((k, v * factor) for k, v in self.coords.items())

    def coefficient(self, key: PureTensor) -> Fraction:
        return self.coords.get(key, Fraction(0))

    def to_dict(self) -> list:
        return [[[list(f) for f in key], str(coef)] for key, coef in self]


@dataclass(frozen=True, slots=True, order=True)
class PBWExponent:
    """c ∈ ℤ_{≥0}^{P∖A} en el orden canónico de P∖A (sin diagonal)."""

    n: int
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.c) != len(off_diagonal_elements(self.n)):
            raise InvalidInputError("longitud de c incompatible con n", field="c", value=self.c)
        if any(x < 0 for x in self.c):
            raise InvalidInputError(f"exponente PBW negativo: {self.c}", field="c", value=self.c)

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[tuple[int, int], int]) -> "PBWExponent":
        return cls(n, tuple(values.get(tuple(p), 0) for p in off_diagonal_elements(n)))

    def get(self, i: int, j: int) -> int:
        for p, value in zip(off_diagonal_elements(self.n), self.c):
            if p == (i, j):
                return value
        return 0

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for p, value in zip(off_diagonal_elements(self.n), self.c):
            yield (p.i, p.j), value

    @property
    def is_zero(self) -> bool:
        return not any(self.c)

    def to_dict(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in self.items() if v}
