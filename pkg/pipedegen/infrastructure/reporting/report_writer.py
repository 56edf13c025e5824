"""
PipeDegen – Report Writer
==========================
Agrega certificados en tablas pandas y las escribe como json, csv o md.

TABLAS:
    - una fila por partición (chequeos, fallidos, parciales, tiempo)
    - una fila de resumen por censo
    - percentiles de tiempo cuando los certificados traen tiempos
    - en md, además, la cadena de ⋖ de cada partición
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Sequence

import pandas as pd

from pipedegen.domain.exceptions.domain_errors import InvalidInputError

FORMATS = ("json", "csv", "md")


class ReportWriter:
    """Construye y escribe reportes a partir de certificados ya validados."""

    def partition_frame(self, certificates: Sequence[dict[str, Any]]) -> pd.DataFrame:
        rows = []
        for idx, cert in enumerate(certificates):
            config = cert.get("config", {})
            for part in cert.get("partitions", []):
                checks = part.get("checks", [])
                rows.append(
                    {
                        "certificate": idx,
                        "command": cert.get("command"),
                        "n": config.get("n"),
                        "signature": ",".join(str(k) for k in config.get("signature", [])),
                        "partition": part.get("partition"),
                        "label": part.get("label"),
                        "checks": len(checks),
                        "failed": sum(1 for c in checks if not c["passed"] and not c.get("partial")),
                        "partial": sum(1 for c in checks if c.get("partial")),
                        "passed": all(c["passed"] for c in checks),
                        "timing_ms": part.get("timing_ms"),
                    }
                )
            census = cert.get("census")
            if census:
                rows.append(
                    {
                        "certificate": idx,
                        "command": "census",
                        "n": census["n"],
                        "signature": ",".join(str(k) for k in census["signature"]),
                        "partition": f"{census['distinct_ideals']} ideales",
                        "label": f"{census['orbits']} órbitas",
                        "checks": census["partitions"],
                        "failed": 0,
                        "partial": int(census.get("partial", False)),
                        "passed": not census.get("partial", False),
                        "timing_ms": None,
                    }
                )
        return pd.DataFrame(rows)

    def timing_frame(self, frame: pd.DataFrame) -> pd.DataFrame:
        timings = frame["timing_ms"].dropna() if "timing_ms" in frame else pd.Series(dtype=float)
        if timings.empty:
            return pd.DataFrame()
        quantiles = timings.astype(float).quantile([0.5, 0.9, 0.99])
        return pd.DataFrame({"percentile": ["p50", "p90", "p99"], "timing_ms": quantiles.to_list()})

    def order_tables(self, certificates: Sequence[dict[str, Any]]) -> list[tuple[str, list[str]]]:
        tables = []
        for cert in certificates:
            for part in cert.get("partitions", []):
                for check in part.get("checks", []):
                    order = check.get("payload", {}).get("order")
                    if check["name"] == "degeneration" and order:
                        tables.append((part["label"], order["chain"]))
        return tables

    def render(self, certificates: Sequence[dict[str, Any]], fmt: str) -> str:
        if fmt not in FORMATS:
            raise InvalidInputError(f"formato desconocido {fmt!r}", field="format", value=fmt)
        if not certificates:
            raise InvalidInputError("no hay certificados para reportar", field="certificates")
        frame = self.partition_frame(certificates)
        timings = self.timing_frame(frame)
        if fmt == "json":
            body = frame.to_json(orient="records", indent=2, force_ascii=False)
            if not timings.empty:
                body = '{"partitions": ' + body + ', "timings": ' + timings.to_json(orient="records") + "}"
            return body + "\n"
        if fmt == "csv":
            return frame.to_csv(index=False)
        sections = ["# Reporte PipeDegen", "", frame.to_markdown(index=False)]
        if not timings.empty:
            sections += ["", "## Tiempos", "", timings.to_markdown(index=False)]
        orders = self.order_tables(certificates)
        if orders:
            sections += ["", "## Orden ⋖ por partición", ""]
            for label, chain in orders:
                sections.append(f"- `{label}`: " + " > ".join(chain))
        return "\n".join(sections) + "\n"

    def write(self, certificates: Sequence[dict[str, Any]], fmt: str, path: str | Path) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.render(certificates, fmt), encoding="utf-8")
        return target
