"""
PipeDegen – Domain Value Object: IntegerLinearMap
==================================================
Mapa lineal entero (matriz numpy int64) entre retículos indexados por
listas de etiquetas. matrix[fila_salida, columna_entrada].

Lo usan ξ (UnimodularMap sobre ℤ^P) y el mapa de exponentes de θ
(sobre las n² variables z_{i,j}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from pipedegen.domain.services.exact_linalg import bareiss_determinant


@dataclass(frozen=True, eq=False)
class IntegerLinearMap:
    labels: tuple[Hashable, ...]
    matrix: np.ndarray

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        result = self.matrix @ np.asarray(vector, dtype=np.int64)
        return tuple(int(v) for v in result)

    def determinant(self) -> int:
        """Determinante exacto (Bareiss sobre enteros de Python)."""
        return bareiss_determinant(self.matrix.tolist())

    @property
    def is_unimodular(self) -> bool:
        return abs(self.determinant()) == 1

    def to_dict(self) -> dict:
        return {
            "labels": [list(label) for label in self.labels],
            "matrix": self.matrix.tolist(),
        }


UnimodularMap = IntegerLinearMap
