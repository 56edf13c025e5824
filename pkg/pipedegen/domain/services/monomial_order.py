"""
PipeDegen – Orden monomial ⋖
=============================
Orden total de las variables z_{i,j} determinado por (O, C), su
extensión lexicográfica a monomios y términos iniciales.

DECISIONES DE DISEÑO:
    - El orden se guarda como tabla de rangos explícita (rank[i][j],
      mayor rango = variable mayor), serializable en los certificados.
    - Filas con i menor son siempre mayores; dentro de la fila i las
      posiciones j se recorren en la cadena
          z_{i,r(i,l_1)} ⋗ z_{i,r(i,n)} ⋗ … ⋗ z_{i,r(i,l_1+1)} ⋗ z_{i,r(i,l_2)} ⋗ …
      con l_1 > l_2 > … las posiciones marcadas (i,l) ∈ O ∪ A, seguida de
      las posiciones j < i en orden decreciente.
    - ⋖^w se obtiene reetiquetando columnas: z_{i,w(j)} ocupa el rango de z_{i,j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.pipe_dreams import r_table
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.polynomial import Monomial, Polynomial, ZVariable


@dataclass(frozen=True, slots=True)
class VarOrder:
    """Orden total sobre las n² variables z_{i,j}; rank[i-1][j-1] ∈ [0, n²)."""

    n: int
    rank: tuple[tuple[int, ...], ...]

    def rank_of(self, var: tuple[int, int]) -> int:
        return self.rank[var[0] - 1][var[1] - 1]

    @property
    def descending(self) -> tuple[ZVariable, ...]:
        variables = [ZVariable(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]
        return tuple(sorted(variables, key=self.rank_of, reverse=True))

    def row_chain(self, i: int) -> tuple[ZVariable, ...]:
        """Variables de la fila i de mayor a menor."""
        return tuple(v for v in self.descending if v.i == i)

    def key(self, mono: Monomial) -> tuple[int, ...]:
        """Clave lexicográfica: exponentes leídos desde la variable mayor."""
        exps = mono.as_dict()
        return tuple(exps.get(v, 0) for v in self.descending)

    def twisted(self, w: Permutation) -> "VarOrder":
        """⋖^w: rank^w(z_{i,j}) = rank(z_{i,w⁻¹(j)})."""
        inverse = w.inverse()
        return VarOrder(
            self.n,
            tuple(
                tuple(self.rank[i][inverse(j) - 1] for j in range(1, self.n + 1))
                for i in range(self.n)
            ),
        )

    def to_table(self) -> list[list[int]]:
        return [list(row) for row in self.rank]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rank": self.to_table(),
            "chain": [v.label() for v in self.descending],
        }


def _row_positions(oc: OCPartition, i: int) -> list[int]:
    """Posiciones j de la fila i de mayor a menor según la cadena de ⋖."""
    n = oc.n
    anchored = []
    anchor = i
    for j in range(i, n + 1):
        if oc.is_marked((i, j)):
            anchor = j
        anchored.append((anchor, j))
    anchored.sort(key=lambda pair: (-pair[0], pair[1] != pair[0], -pair[1]))
    return [j for _, j in anchored] + list(range(i - 1, 0, -1))


@lru_cache(maxsize=4096)
def variable_order(oc: OCPartition) -> VarOrder:
    n = oc.n
    r = r_table(oc)
    rank = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        base = (n - i) * n
        for position, j in enumerate(_row_positions(oc, i)):
            rank[i - 1][r[i - 1][j - 1] - 1] = base + (n - 1 - position)
    return VarOrder(n, tuple(tuple(row) for row in rank))


# ─── Términos iniciales ─────────────────────────────────────────────────


def initial_term(p: Polynomial, order: VarOrder) -> tuple[Monomial, int]:
    """Término ⋖-máximo (monomio, coeficiente) por maximización directa."""
    if p.is_zero:
        raise InvalidInputError("el polinomio cero no tiene término inicial", field="polynomial")
    mono, coef = max(p, key=lambda term: order.key(term[0]))
    return mono, coef


def greedy_initial_columns(indices: Iterable[int], order: VarOrder) -> tuple[int, ...]:
    """
    Columnas (α_1, …, α_k) del término inicial de D_S: como las filas se
    comparan primero, la fila r toma la mayor variable disponible.
    """
    remaining = set(indices)
    chosen = []
    for row in range(1, len(remaining) + 1):
        best = max(remaining, key=lambda j: order.rank_of((row, j)))
        chosen.append(best)
        remaining.discard(best)
    return tuple(chosen)


def columns_monomial(columns: Iterable[int]) -> Monomial:
    """z_{1,α_1} ⋯ z_{k,α_k}."""
    return Monomial.from_variables(ZVariable(row, j) for row, j in enumerate(columns, start=1))
