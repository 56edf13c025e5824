"""
PipeDegen – Domain Exceptions
==============================
Excepciones del dominio combinatorio.

Capturan entradas inválidas y límites de capacidad/presupuesto; un
chequeo que falla NO es una excepción (queda registrado en el certificado).

JERARQUÍA:
    DomainError (base)
    ├── InvalidInputError
    ├── CapacityError
    ├── BudgetExceededError
    ├── ParseError
    └── ConfigurationError
"""

from __future__ import annotations

from typing import Any


class DomainError(Exception):
    """Excepción base para errores de dominio."""

    def __init__(self, message: str, code: str = "DOMAIN_ERROR"):
        self.message = message
        self.code = code
        super().__init__(message)

    def to_dict(self) -> dict:
        return {
            "error": self.code,
            "message": self.message,
        }


class InvalidInputError(DomainError):
    """Entrada fuera del dominio de una operación (índices repetidos, aristas inválidas...)."""

    def __init__(self, message: str, field: str | None = None, value: Any = None):
        super().__init__(message, code="INVALID_INPUT")
        self.field = field
        self.value = value

    def to_dict(self) -> dict:
        data = super().to_dict()
        if self.field is not None:
            data["field"] = self.field
        return data


class CapacityError(DomainError):
    """El problema excede una cota configurada (bitset, nivel de serie, cota D)."""

    def __init__(self, message: str, limit: int | None = None, requested: int | None = None):
        super().__init__(message, code="CAPACITY_EXCEEDED")
        self.limit = limit
        self.requested = requested

    def to_dict(self) -> dict:
        data = super().to_dict()
        data.update({"limit": self.limit, "requested": self.requested})
        return data


class BudgetExceededError(DomainError):
    """Se agotó el presupuesto cooperativo de tiempo."""

    def __init__(
        self,
        message: str,
        budget_ms: int | None = None,
        elapsed_ms: int | None = None,
        partial: dict | None = None,
    ):
        super().__init__(message, code="BUDGET_EXCEEDED")
        self.budget_ms = budget_ms
        self.elapsed_ms = elapsed_ms
        self.partial = partial or {}

    def to_dict(self) -> dict:
        data = super().to_dict()
        data.update({"budget_ms": self.budget_ms, "elapsed_ms": self.elapsed_ms, "partial": self.partial})
        return data


class ParseError(DomainError):
    """Texto de entrada mal formado (conjuntos, firmas, pesos)."""

    def __init__(self, message: str, text: str | None = None):
        super().__init__(message, code="PARSE_ERROR")
        self.text = text

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["text"] = self.text
        return data


class ConfigurationError(DomainError):
    """Configuración de barrido inválida."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message, code="CONFIG_INVALID")
        self.field = field

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["field"] = self.field
        return data
