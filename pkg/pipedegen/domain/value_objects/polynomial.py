"""
PipeDegen – Domain Value Objects: variables, monomios y polinomios
===================================================================
Álgebra dispersa exacta sobre variables z_{i,j} (caso finito) y
z^{(l)}_{i,j} (caso semi-infinito).

DECISIONES DE DISEÑO:
    - Monomial guarda los exponentes como tupla ordenada de pares
      (variable, exponente ≠ 0); admite exponentes negativos (imágenes
      de Laurent de θ y θ_∞).
    - Polynomial guarda términos con coeficiente entero no nulo en orden
      canónico, así la serialización es determinista.
    - Las variables son NamedTuple: comparables y baratas de hashear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple

from pipedegen.domain.exceptions.domain_errors import InvalidInputError


class ZVariable(NamedTuple):
    """z_{i,j}: fila i, columna j."""

    i: int
    j: int

    def label(self) -> str:
        return f"z[{self.i},{self.j}]"


class SeriesVariable(NamedTuple):
    """z^{(l)}_{i,j}: coeficiente de t^l de la serie z_{i,j}(t)."""

    i: int
    j: int
    l: int

    def label(self) -> str:
        return f"z{self.l}[{self.i},{self.j}]"


def _label(var: Hashable) -> str:
    label = getattr(var, "label", None)
    return label() if callable(label) else str(var)


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    """Monomio (de Laurent) z^c."""

    exps: tuple[tuple[Hashable, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Hashable, int]) -> "Monomial":
        return cls(tuple(sorted((v, e) for v, e in mapping.items() if e != 0)))

    @classmethod
    def from_variables(cls, variables: Iterable[Hashable]) -> "Monomial":
        counts: dict[Hashable, int] = {}
        for var in variables:
            counts[var] = counts.get(var, 0) + 1
        return cls.from_mapping(counts)

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    def as_dict(self) -> dict[Hashable, int]:
        return dict(self.exps)

    def exponent(self, var: Hashable) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    @property
    def variables(self) -> tuple[Hashable, ...]:
        return tuple(v for v, _ in self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = self.as_dict()
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial.from_mapping(merged)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        merged = self.as_dict()
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) - e
        return Monomial.from_mapping(merged)

    def __pow__(self, power: int) -> "Monomial":
        return Monomial.from_mapping({v: e * power for v, e in self.exps})

    def label(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            parts.append(_label(v) if e == 1 else f"{_label(v)}^{e}")
        return "*".join(parts)

    def to_dict(self) -> list:
        return [[list(v), e] for v, e in self.exps]


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Polinomio con coeficientes enteros exactos."""

    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Monomial, int]) -> "Polynomial":
        return cls(tuple(sorted((m, c) for m, c in mapping.items() if c != 0)))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Monomial, int]]) -> "Polynomial":
        acc: dict[Monomial, int] = {}
        for mono, coef in terms:
            acc[mono] = acc.get(mono, 0) + coef
        return cls.from_mapping(acc)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_terms((*self.terms, *other.terms))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_terms(
            (m1 * m2, c1 * c2) for m1, c1 in self.terms for m2, c2 in other.terms
        )

    def label(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mono, coef in self.terms:
            sign = "-" if coef < 0 else "+"
            magnitude = "" if abs(coef) == 1 else f"{abs(coef)}*"
            chunks.append(f"{sign} {magnitude}{mono.label()}")
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else text

    def to_dict(self) -> list:
        return [[mono.to_dict(), coef] for mono, coef in self.terms]


@dataclass(frozen=True, slots=True, order=True)
class PlueckerVariable:
    """X_{i_1<…<i_k} (con nivel l ≥ 0 en el caso semi-infinito)."""

    indices: tuple[int, ...]
    level: int = 0

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidInputError(
                f"índices de Plücker no estrictamente crecientes: {self.indices}",
                field="indices",
                value=self.indices,
            )

    @classmethod
    def from_unsorted(cls, indices: Iterable[int], level: int = 0) -> tuple["PlueckerVariable", int]:
        """Normaliza X_{i_σ(1)…} = (−1)^σ X_{ordenado}; devuelve (variable, signo)."""
        items = tuple(indices)
        if len(set(items)) != len(items):
            raise InvalidInputError(f"índices repetidos: {items}", field="indices", value=items)
        inversions = sum(1 for a in range(len(items)) for b in range(a + 1, len(items)) if items[a] > items[b])
        return cls(tuple(sorted(items)), level), (-1) ** inversions

    @property
    def k(self) -> int:
        return len(self.indices)

    def label(self) -> str:
        body = ",".join(str(i) for i in self.indices)
        return f"X[{body}]" if self.level == 0 else f"X{self.level}[{body}]"

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "level": self.level}
