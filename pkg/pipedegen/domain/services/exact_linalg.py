"""
PipeDegen – Álgebra lineal exacta
==================================
Eliminación gaussiana libre de fracciones sobre enteros de Python.

RESPONSABILIDAD:
    - Determinante y rango de Bareiss (toda división es exacta: se divide
      solo por el pivote anterior).
    - Eliminador incremental que detecta el primer vector dependiente,
      para nombrar el punto culpable en un certificado fallido.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Mapping, Sequence


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinante exacto de una matriz cuadrada entera."""
    rows = [[int(v) for v in row] for row in matrix]
    size = len(rows)
    if size == 0:
        return 1
    if any(len(row) != size for row in rows):
        raise ValueError("bareiss_determinant requiere una matriz cuadrada")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
        prev = pivot
    return sign * rows[size - 1][size - 1]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rango exacto de una matriz entera rectangular."""
    rows = [[int(v) for v in row] for row in matrix]
    if not rows:
        return 0
    height, width = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(width):
        pivot_row = next((r for r in range(rank, height) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, height):
            factor = rows[r][col]
            for c in range(col + 1, width):
                rows[r][c] = (rows[r][c] * pivot - factor * rows[rank][c]) // prev
            rows[r][col] = 0
        prev = pivot
        rank += 1
        if rank == height:
            break
    return rank


def integer_row(coords: Mapping[Hashable, Fraction | int]) -> dict[Hashable, int]:
    """Escala un vector racional disperso a enteros primitivos."""
    denominators = [Fraction(v).denominator for v in coords.values()]
    scale = lcm(*denominators) if denominators else 1
    row = {key: int(Fraction(v) * scale) for key, v in coords.items() if v != 0}
    return _primitive(row)


def _primitive(row: dict[Hashable, int]) -> dict[Hashable, int]:
    content = 0
    for value in row.values():
        content = gcd(content, value)
    if content > 1:
        return {key: value // content for key, value in row.items()}
    return row


class FractionFreeEliminator:
    """
    Forma escalonada incremental de vectores dispersos enteros.

    Cada fila nueva se reduce contra los pivotes anteriores en orden de
    inserción (multiplicación cruzada + división por contenido), de modo
    que una fila que se anula depende de las anteriores.
    """

    def __init__(self) -> None:
        self._pivots: list[tuple[Hashable, dict[Hashable, int]]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, coords: Mapping[Hashable, Fraction | int]) -> bool:
        """Agrega un vector; devuelve False si es combinación de los anteriores."""
        row = integer_row(coords)
        for pivot_col, pivot_row in self._pivots:
            factor = row.get(pivot_col, 0)
            if not factor:
                continue
            lead = pivot_row[pivot_col]
            merged: dict[Hashable, int] = {key: value * lead for key, value in row.items()}
            for key, value in pivot_row.items():
                merged[key] = merged.get(key, 0) - factor * value
            row = _primitive({key: value for key, value in merged.items() if value})
        if not row:
            return False
        self._pivots.append((min(row), row))
        return True
