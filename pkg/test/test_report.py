"""Persistencia de certificados y reportes agregados."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pandas as pd
import pytest

from pipedegen.application.dto.certificate_dto import SweepConfig
from pipedegen.domain.exceptions.domain_errors import InvalidInputError, ParseError
from pipedegen.domain.value_objects.oc_partition import OCPartition


@pytest.fixture
def single_certificate(container, example_oc):
    cfg = SweepConfig.build(
        n=4,
        signature=(1, 2, 3),
        order_part=example_oc.to_hex(),
        weights=((1, 0, 0), (0, 1, 1)),
        suites=("degeneration", "polytope", "tableaux"),
    )
    return container.verify_usecase.run(cfg, example_oc)


@pytest.fixture
def sweep_certificate(container):
    cfg = SweepConfig.build(n=3, signature=(1, 2), selector="all", weights=((1, 1),))
    return container.verify_usecase.run(cfg)


def test_store_round_trip(container, single_certificate, tmp_path):
    store = container.certificate_store
    path = store.save(single_certificate, tmp_path / "cert.json")
    loaded = store.load(path)
    assert loaded["summary"] == single_certificate.summary()
    assert loaded["config"]["order_part"] == single_certificate.config["order_part"]
    assert store.dumps(single_certificate) == path.read_text(encoding="utf-8")


def test_store_rejects_invalid_certificate(container, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"tool": "pipedegen"}), encoding="utf-8")
    with pytest.raises(ParseError):
        container.certificate_store.load(bad)
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ParseError):
        container.certificate_store.load(broken)


def test_single_certificate_passes(single_certificate):
    assert single_certificate.passed
    (report,) = single_certificate.partitions
    assert report.partition == OCPartition.from_elements(4, [(1, 2), (1, 4), (2, 3)]).to_hex()
    assert report.timing_ms is None


def test_sweep_has_census_and_all_partitions(sweep_certificate):
    assert len(sweep_certificate.partitions) == 8
    assert sweep_certificate.census is not None
    assert (sweep_certificate.census.distinct_ideals, sweep_certificate.census.orbits) == (3, 1)


def test_report_row_counts(container, single_certificate, sweep_certificate, tmp_path):
    store = container.certificate_store
    one = store.save(single_certificate, tmp_path / "one.json")
    sweep = store.save(sweep_certificate, tmp_path / "sweep.json")
    usecase = container.report_usecase

    rows = json.loads(usecase.emit([one], "json"))
    assert len(rows) == 1

    csv_path = tmp_path / "report.csv"
    usecase.emit([one, sweep], "csv", csv_path)
    frame = pd.read_csv(csv_path)
    assert len(frame) == 1 + 8 + 1
    assert (frame["command"] == "census").sum() == 1


def test_markdown_lists_order_chains(container, single_certificate, tmp_path):
    path = container.certificate_store.save(single_certificate, tmp_path / "one.json")
    text = container.report_usecase.emit([path], "md")
    assert text.startswith("# Reporte PipeDegen")
    assert "## Orden ⋖ por partición" in text


def test_report_needs_certificates(container):
    with pytest.raises(InvalidInputError):
        container.report_usecase.emit([], "md")


def test_report_rejects_unknown_format(container, single_certificate, tmp_path):
    path = container.certificate_store.save(single_certificate, tmp_path / "one.json")
    with pytest.raises(InvalidInputError):
        container.report_usecase.emit([path], "xml")


def test_published_schema_accepts_certificates(container, single_certificate, sweep_certificate):
    schema_path = Path(__file__).resolve().parent.parent / "doc" / "certificate.schema.json"
    schema = json.loads(schema_path.read_text(encoding="utf-8"))
    for certificate in (single_certificate, sweep_certificate):
        jsonschema.validate(container.certificate_store.to_data(certificate), schema)
