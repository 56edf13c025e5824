"""
PipeDegen – Domain Value Object: LatticePoint
==============================================
Punto entero de ℤ^P como tupla indexada por el orden canónico de P.
Se usa una tupla desnuda (no una clase) porque los conjuntos suma de
Minkowski manejan decenas de miles de puntos.
"""

from __future__ import annotations

from typing import Iterable

LatticePoint = tuple[int, ...]


def indicator_point(mask: int, size: int) -> LatticePoint:
    """Vector indicador 1_M de un bitmask sobre P."""
    return tuple(mask >> idx & 1 for idx in range(size))


def add_points(x: LatticePoint, y: LatticePoint) -> LatticePoint:
    return tuple(a + b for a, b in zip(x, y))


def sumset(left: Iterable[LatticePoint], right: Iterable[LatticePoint]) -> frozenset[LatticePoint]:
    """Suma de Minkowski exacta de dos conjuntos finitos de puntos."""
    right = tuple(right)
    return frozenset(add_points(x, y) for x in left for y in right)
