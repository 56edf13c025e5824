"""
PipeDegen – Application DTO: Certificados
==========================================
Modelos Pydantic de la configuración de un barrido y del certificado que
produce. El esquema JSON publicado en doc/ se genera desde `Certificate`.

REPRODUCIBILIDAD:
    Con record_timings desactivado no hay relojes ni fechas en el
    certificado; misma configuración + misma versión ⇒ mismos bytes.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from pipedegen.domain.exceptions.domain_errors import ConfigurationError

SUITES = ("degeneration", "kernel", "sagbi", "polytope", "tableaux", "basis", "census")


class SweepConfig(BaseModel):
    """Configuración validada de `verify`."""

    n: int = Field(..., description="Tamaño de la matriz (𝔰𝔩_n)")
    signature: tuple[int, ...] = Field(..., description="Firma d ⊆ [1, n−1]")
    selector: Literal["single", "all", "sample"] = "single"
    order_part: Optional[str] = Field(default=None, description="Selector de O (hex o lista)")
    weights: tuple[tuple[int, ...], ...] = Field(..., description="Pesos λ en la base ω")
    suites: tuple[str, ...] = SUITES
    budget_ms: int = 600_000
    workers: int = 1
    sample_size: int = 32
    seed: int = 0
    allow_large: bool = False
    output: Optional[str] = None

    model_config = {"frozen": True}

    @field_validator("n")
    @classmethod
    def _n_range(cls, v: int) -> int:
        if v < 2:
            raise ValueError("n debe ser ≥ 2")
        return v

    @field_validator("budget_ms", "workers", "sample_size")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("debe ser > 0")
        return v

    @field_validator("weights")
    @classmethod
    def _non_empty(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not v:
            raise ValueError("la lista de pesos λ está vacía")
        return v

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        unknown = sorted(set(v) - set(SUITES))
        if unknown:
            raise ValueError(f"suites desconocidas: {unknown}")
        return tuple(s for s in SUITES if s in v)

    @model_validator(mode="after")
    def _consistent(self) -> "SweepConfig":
        if not self.signature or any(not 1 <= k <= self.n - 1 for k in self.signature):
            raise ValueError(f"firma {self.signature} fuera de [1,{self.n - 1}]")
        for lam in self.weights:
            if len(lam) != self.n - 1 or any(a < 0 for a in lam):
                raise ValueError(f"peso {lam} no es dominante para n={self.n}")
        if self.selector == "single" and self.order_part is None:
            raise ValueError("selector 'single' requiere order_part")
        return self

    @classmethod
    def build(cls, **values: Any) -> "SweepConfig":
        """Como el constructor, pero los errores salen como ConfigurationError."""
        try:
            return cls(**values)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(x) for x in first.get("loc", ())) or None
            raise ConfigurationError(first.get("msg", str(exc)), field=where) from exc


class CheckResult(BaseModel):
    """Resultado de un chequeo; un fallo queda registrado, no se lanza."""

    name: str
    passed: bool
    partial: bool = False
    weight: Optional[list[int]] = None
    payload: dict[str, Any] = Field(default_factory=dict)
    error: Optional[dict[str, Any]] = None


class PartitionReport(BaseModel):
    partition: str
    label: str
    order_part: list[list[int]]
    checks: list[CheckResult] = Field(default_factory=list)
    timing_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def partial(self) -> bool:
        return any(c.partial for c in self.checks)


class CensusReport(BaseModel):
    n: int
    signature: list[int]
    partitions: int
    distinct_ideals: int
    orbits: int
    reached_ideals: int = 0
    classes: dict[str, list[str]]
    assumption: str
    partial: bool = False


class Certificate(BaseModel):
    tool: str = "pipedegen"
    version: str
    schema_version: str
    command: str
    config: dict[str, Any]
    partitions: list[PartitionReport] = Field(default_factory=list)
    census: Optional[CensusReport] = None
    timings: Optional[dict[str, int]] = None

    @property
    def partial(self) -> bool:
        return any(p.partial for p in self.partitions) or bool(self.census and self.census.partial)

    @property
    def failed(self) -> bool:
        return any(not c.passed and not c.partial for p in self.partitions for c in p.checks)

    @property
    def passed(self) -> bool:
        return not self.failed and not self.partial

    def summary(self) -> dict[str, Any]:
        checks = [c for p in self.partitions for c in p.checks]
        return {
            "partitions": len(self.partitions),
            "checks": len(checks),
            "failed": sum(1 for c in checks if not c.passed and not c.partial),
            "partial": sum(1 for c in checks if c.partial),
            "passed": self.passed,
        }
