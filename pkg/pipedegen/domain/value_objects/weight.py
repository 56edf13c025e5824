"""
PipeDegen – Domain Value Object: Weight
========================================
Peso dominante λ = (a_1, …, a_{n−1}) en la base de pesos fundamentales.

FÓRMULAS:
    λ(i) = a_i + … + a_{n−1},   λ(n) = 0
    firma d = (i : a_i > 0)
"""

from __future__ import annotations

from dataclasses import dataclass

from pipedegen.domain.exceptions.domain_errors import InvalidInputError


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    """Peso entero dominante de 𝔰𝔩_n."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a) < 1:
            raise InvalidInputError("un peso necesita n−1 ≥ 1 coeficientes", field="a", value=self.a)
        if any(x < 0 for x in self.a):
            raise InvalidInputError(f"peso no dominante: {self.a}", field="a", value=self.a)

    @classmethod
    def fundamental(cls, n: int, k: int) -> "Weight":
        if not 1 <= k <= n - 1:
            raise InvalidInputError(f"ω_{k} no existe para n={n}", field="k", value=k)
        return cls(tuple(1 if i == k else 0 for i in range(1, n)))

    @classmethod
    def rho(cls, signature: tuple[int, ...], n: int) -> "Weight":
        """Suma de los ω_k con k en la firma."""
        return cls(tuple(1 if i in signature else 0 for i in range(1, n)))

    @property
    def n(self) -> int:
        return len(self.a) + 1

    def lam(self, i: int) -> int:
        """λ(i)."""
        return sum(self.a[i - 1:]) if i <= len(self.a) else 0

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(i for i, ai in enumerate(self.a, start=1) if ai > 0)

    @property
    def size(self) -> int:
        """|λ| = Σ a_i (número de factores fundamentales)."""
        return sum(self.a)

    @property
    def factors(self) -> tuple[int, ...]:
        """Lista de alturas k de los factores ω_k en orden ω_1^{a_1} ⊗ ω_2^{a_2} ⊗ …"""
        return tuple(k for k, ak in enumerate(self.a, start=1) for _ in range(ak))

    def __add__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise InvalidInputError("pesos de rangos distintos", field="a", value=(self.a, other.a))
        return Weight(tuple(x + y for x, y in zip(self.a, other.a)))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + ")"

    def to_dict(self) -> list[int]:
        return list(self.a)
