"""
Dependency Injection Container.

Contenedor que crea de forma perezosa la configuración, los adaptadores
de infraestructura y los casos de uso. Vive en la capa más externa y es
el único lugar donde se instancian dependencias concretas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from pipedegen.application.use_cases.report_usecase import ReportUseCase
from pipedegen.application.use_cases.verify_usecase import VerifyUseCase
from pipedegen.infrastructure.reporting.certificate_store import CertificateStore
from pipedegen.infrastructure.reporting.report_writer import ReportWriter
from pipedegen.shared.config.settings import Settings, settings as default_settings


@dataclass
class Container:
    """Contenedor de Inyección de Dependencias."""

    settings: Settings = field(default_factory=lambda: default_settings)

    _certificate_store: Optional[CertificateStore] = None
    _report_writer: Optional[ReportWriter] = None
    _verify_usecase: Optional[VerifyUseCase] = None
    _report_usecase: Optional[ReportUseCase] = None

    # ==================== Infraestructura ====================

    @property
    def certificate_store(self) -> CertificateStore:
        if self._certificate_store is None:
            self._certificate_store = CertificateStore()
        return self._certificate_store

    @property
    def report_writer(self) -> ReportWriter:
        if self._report_writer is None:
            self._report_writer = ReportWriter()
        return self._report_writer

    # ==================== Use Cases ====================

    @property
    def verify_usecase(self) -> VerifyUseCase:
        if self._verify_usecase is None:
            self._verify_usecase = VerifyUseCase(settings=self.settings)
        return self._verify_usecase

    @property
    def report_usecase(self) -> ReportUseCase:
        if self._report_usecase is None:
            self._report_usecase = ReportUseCase(self.certificate_store, self.report_writer)
        return self._report_usecase

    # ==================== Lifecycle ====================

    def reset(self) -> None:
        """Resetea todas las instancias (útil para tests)."""
        self._certificate_store = None
        self._report_writer = None
        self._verify_usecase = None
        self._report_usecase = None

    def override(self, name: str, instance: Any) -> None:
        """
        Override una dependencia (útil para tests).

        Args:
            name: Nombre de la dependencia (ej: 'report_writer')
            instance: Instancia a usar
        """
        attr_name = f"_{name}"
        if hasattr(self, attr_name):
            setattr(self, attr_name, instance)
        else:
            raise ValueError(f"Unknown dependency: {name}")


# ==================== Global Container ====================

_container: Optional[Container] = None


def get_container() -> Container:
    """Instancia global del contenedor (singleton)."""
    global _container
    if _container is None:
        _container = Container()
    return _container

