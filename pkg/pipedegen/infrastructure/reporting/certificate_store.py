"""
PipeDegen – Certificate Store
==============================
Persistencia de certificados en JSON canónico (claves ordenadas, UTF-8)
y lectura validada contra el esquema publicado.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from pipedegen.application.dto.certificate_dto import Certificate
from pipedegen.domain.exceptions.domain_errors import ParseError
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("infrastructure.certificate_store")


def certificate_schema() -> dict[str, Any]:
    """Esquema JSON de un certificado (el mismo que doc/certificate.schema.json)."""
    return Certificate.model_json_schema()


class CertificateStore:
    """Serializa, guarda y carga certificados."""

    def __init__(self, schema: dict[str, Any] | None = None):
        self._schema = schema or certificate_schema()

    def to_data(self, certificate: Certificate) -> dict[str, Any]:
        data = certificate.model_dump(mode="json")
        data["summary"] = certificate.summary()
        return data

    def dumps(self, certificate: Certificate) -> str:
        return json.dumps(self.to_data(certificate), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def save(self, certificate: Certificate, path: str | Path) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.dumps(certificate), encoding="utf-8")
        logger.info(f"Certificado escrito en {target}")
        return target

    def validate(self, data: dict[str, Any], source: str = "<memoria>") -> dict[str, Any]:
        try:
            jsonschema.validate(instance=data, schema=self._schema)
        except jsonschema.ValidationError as exc:
            raise ParseError(f"certificado inválido ({source}): {exc.message}", text=source) from exc
        return data

    def load(self, path: str | Path) -> dict[str, Any]:
        source = Path(path)
        try:
            data = json.loads(source.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"JSON mal formado en {source}: {exc.msg}", text=str(source)) from exc
        return self.validate(data, str(source))
