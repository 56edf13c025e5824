"""
PipeDegen – Settings (Pydantic BaseSettings)
=============================================
Configuración centralizada cargada desde variables de entorno / .env.
Se usa pydantic-settings para validación estricta al arranque.

Todas las variables aceptan el prefijo PIPEDEGEN_ (p. ej. PIPEDEGEN_WORKERS=4).
"""

from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # ─── Logging ────────────────────────────────────────────────────────
    log_level: str = Field(default="INFO", description="Nivel del root logger")

    # ─── Capacidad ──────────────────────────────────────────────────────
    bitset_width: int = Field(
        default=64,
        description="Máximo |P| = n(n+1)/2 codificable como bitset de ideales",
    )
    max_exhaustive_n: int = Field(
        default=4,
        description="n máximo para barridos exhaustivos sin --allow-large",
    )

    # ─── Barridos ───────────────────────────────────────────────────────
    budget_ms: int = Field(
        default=600_000, description="Presupuesto cooperativo por defecto de verify (ms)"
    )
    workers: int = Field(
        default=1, description="Procesos del pool de verificación (1 = en línea)"
    )
    sample_size: int = Field(
        default=32, description="Particiones muestreadas cuando n supera el modo exhaustivo"
    )
    sample_seed: int = Field(default=0, description="Semilla del muestreo de particiones")

    # ─── Semi-infinito ──────────────────────────────────────────────────
    semiinf_d_max: int = Field(
        default=2, description="Cota D de diagonales para ideales finitos de Q"
    )
    semiinf_horizon: int = Field(
        default=12, description="Fila máxima en la que se admiten miembros explícitos de O"
    )

    # ─── Certificados ───────────────────────────────────────────────────
    record_timings: bool = Field(
        default=False,
        description="Incluir tiempos de reloj (rompe la reproducibilidad byte a byte)",
    )
    debug_checks: bool = Field(
        default=False, description="Auto-verificaciones redundantes (más lento)"
    )
    certificate_schema_version: str = Field(
        default="1.0", description="Versión del esquema JSON de certificados"
    )

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "env_prefix": "PIPEDEGEN_",
    }


# Singleton global – se importa donde se necesite
settings = Settings()
