"""
PipeDegen – Domain Value Object: Permutation
=============================================
Permutación de [1, n] en notación de una línea, 1-indexada.

CONVENCIÓN DE COMPOSICIÓN:
    `w.compose(v)` es w∘v, es decir x ↦ w(v(x)). Una palabra
    s_{a1}·s_{a2}···s_{am} se evalúa de derecha a izquierda; por eso
    multiplicar a derecha por la transposición (a, b) intercambia las
    posiciones a y b de la notación de una línea.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from pipedegen.domain.exceptions.domain_errors import InvalidInputError


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """w con w(i) = images[i-1]."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidInputError(
                f"{self.images} no es una biyección de [1,{len(self.images)}]",
                field="images",
                value=self.images,
            )

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """w₀ = (n, n−1, …, 1)."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[tuple[int, int]]) -> "Permutation":
        """Producto de transposiciones s_{a,b} leído de izquierda a derecha (s_{a,a} = id)."""
        images = list(range(1, n + 1))
        for a, b in word:
            images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, value in enumerate(self.images, start=1):
            inv[value - 1] = pos
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def sign(self) -> int:
        seen = [False] * self.n
        sign = 1
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            cursor = start
            while not seen[cursor]:
                seen[cursor] = True
                cursor = self.images[cursor] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.images) + ")"

    def to_dict(self) -> list[int]:
        return list(self.images)
