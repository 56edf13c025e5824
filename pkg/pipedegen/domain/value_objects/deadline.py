"""
PipeDegen – Domain Value Object: Deadline
==========================================
Presupuesto cooperativo: los bucles largos consultan `check()` entre
unidades de trabajo; nunca se cancela a mitad de una operación.

Usa tiempo de pared absoluto (time.time) para poder cruzar procesos.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from pipedegen.domain.exceptions.domain_errors import BudgetExceededError


@dataclass(frozen=True, slots=True)
class Deadline:
    budget_ms: int | None
    started_at: float

    @classmethod
    def start(cls, budget_ms: int | None) -> "Deadline":
        return cls(budget_ms=budget_ms, started_at=time.time())

    @property
    def elapsed_ms(self) -> int:
        return int((time.time() - self.started_at) * 1000)

    def expired(self) -> bool:
        return self.budget_ms is not None and self.elapsed_ms > self.budget_ms

    def check(self, where: str, partial: dict | None = None) -> None:
        if self.expired():
            raise BudgetExceededError(
                f"presupuesto agotado en {where}",
                budget_ms=self.budget_ms,
                elapsed_ms=self.elapsed_ms,
                partial=partial,
            )
