"""
Report Use Case.

Caso de uso para agregar certificados guardados en un reporte tabular.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.infrastructure.reporting.certificate_store import CertificateStore
from pipedegen.infrastructure.reporting.report_writer import ReportWriter
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("application.report")


class ReportUseCase:
    """
    Caso de uso: emitir un reporte.

    Carga cada certificado (validado contra el esquema) y delega el
    formato en ReportWriter.
    """

    def __init__(self, store: CertificateStore, writer: ReportWriter):
        self._store = store
        self._writer = writer

    def emit(self, paths: Sequence[str | Path], fmt: str, output: str | Path | None = None) -> str:
        """
        emit_report: devuelve el texto del reporte y lo escribe si hay `output`.

        Raises:
            InvalidInputError: lista vacía o formato desconocido.
            ParseError: algún certificado no valida contra el esquema.
        """
        if not paths:
            raise InvalidInputError("emit_report necesita al menos un certificado", field="paths")
        certificates = [self._store.load(p) for p in paths]
        text = self._writer.render(certificates, fmt)
        if output is not None:
            self._writer.write(certificates, fmt, output)
            logger.info(f"Reporte {fmt} con {len(certificates)} certificados en {output}")
        return text
