"""
PipeDegen – Domain Value Object: PipePath
==========================================
Recorrido de una tubería por el diagrama de Hasse de P.
"""

from __future__ import annotations

from dataclasses import dataclass

from pipedegen.domain.value_objects.poset_element import PosetElement


@dataclass(frozen=True, slots=True)
class PipePath:
    """Tubería i-ésima: elementos visitados en orden y valor de salida."""

    entry_row: int
    elements: tuple[PosetElement, ...]
    exit_value: int

    def to_dict(self) -> dict:
        return {
            "entry_row": self.entry_row,
            "elements": [p.to_dict() for p in self.elements],
            "exit_value": self.exit_value,
        }
