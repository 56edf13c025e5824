"""
PipeDegen – Domain Value Object: Tableau
=========================================
Tabla de Young en notación inglesa guardada por columnas: columns[c][r]
es la entrada Y_{c+1, r+1} (r-ésima desde arriba). La forma se deriva.

TableauPoint: vector x(Y) indexado por P̄ = [1,n−1] × [1,n] en orden
fila-mayor; x(Y)_{i,j} = cantidad de entradas j en la fila i.
"""

from __future__ import annotations

from dataclasses import dataclass

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.value_objects.weight import Weight

TableauPoint = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class Tableau:
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        heights = [len(col) for col in self.columns]
        if any(h == 0 for h in heights):
            raise InvalidInputError("columna vacía en la tabla", field="columns", value=self.columns)
        if any(a < b for a, b in zip(heights, heights[1:])):
            raise InvalidInputError(
                f"alturas no decrecientes de izquierda a derecha: {heights}",
                field="columns",
                value=self.columns,
            )

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    @property
    def box_count(self) -> int:
        return sum(self.heights)

    def shape(self, n: int) -> Weight:
        """Peso λ cuyo diagrama tiene estas columnas."""
        a = [0] * (n - 1)
        for h in self.heights:
            if h > n - 1:
                raise InvalidInputError(f"columna de altura {h} para n={n}", field="columns", value=self.columns)
            a[h - 1] += 1
        return Weight(tuple(a))

    def rows(self) -> tuple[tuple[int, ...], ...]:
        depth = max(self.heights, default=0)
        return tuple(tuple(col[r] for col in self.columns if len(col) > r) for r in range(depth))

    def render(self) -> str:
        """Notación inglesa: fila 1 arriba, columnas de izquierda a derecha."""
        width = max((len(str(v)) for col in self.columns for v in col), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows())

    def to_dict(self) -> list[list[int]]:
        return [list(col) for col in self.columns]
