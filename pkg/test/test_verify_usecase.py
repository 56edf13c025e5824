"""Caso de uso verify: celdas por partición, errores por chequeo y censo parcial."""

from __future__ import annotations

import pytest

from pipedegen.application.dto.certificate_dto import SweepConfig
from pipedegen.application.use_cases import verify_usecase
from pipedegen.application.use_cases.verify_usecase import run_partition_cell
from pipedegen.domain.exceptions.domain_errors import BudgetExceededError, InvalidInputError
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition


class StopAfter:
    """Deadline que se agota tras `calls` consultas."""

    def __init__(self, calls: int):
        self.calls = calls

    def check(self, where: str, partial: dict | None = None) -> None:
        if self.calls == 0:
            raise BudgetExceededError(f"presupuesto agotado en {where}", budget_ms=1, elapsed_ms=2, partial=partial)
        self.calls -= 1


# ─── Errores de dominio por chequeo ───────────────────────────────────


def test_domain_error_fails_check_and_sweep_continues(monkeypatch):
    def injective_failure(oc, signature, deadline):
        raise InvalidInputError("ψ no es inyectivo en 𝒥_1", field="psi")

    monkeypatch.setitem(verify_usecase.PARTITION_CHECKS, "kernel", injective_failure)
    report = run_partition_cell(
        3, 0, (1, 2), ((1, 1),), ("degeneration", "kernel", "polytope"), Deadline.start(None)
    )
    by_name = {c.name: c for c in report.checks}
    assert by_name["kernel"].passed is False
    assert by_name["kernel"].partial is False
    assert by_name["kernel"].error["error"] == "INVALID_INPUT"
    assert by_name["degeneration"].passed
    assert by_name["polytope"].passed


def test_failed_check_marks_certificate_failed(container, monkeypatch):
    def injective_failure(oc, signature, deadline):
        raise InvalidInputError("ψ no es inyectivo", field="psi")

    monkeypatch.setitem(verify_usecase.PARTITION_CHECKS, "kernel", injective_failure)
    cfg = SweepConfig.build(n=3, signature=(1, 2), selector="all", weights=((1, 1),), suites=("kernel",))
    certificate = container.verify_usecase.run(cfg)
    assert len(certificate.partitions) == 8
    assert not certificate.passed
    assert not certificate.partial


# ─── Censo interrumpido ───────────────────────────────────────────────


def test_partial_census_keeps_progress(container):
    cfg = SweepConfig.build(n=3, signature=(1, 2), selector="all", weights=((1, 1),), suites=("census",))
    partitions = list(OCPartition.all_partitions(3))
    census = container.verify_usecase._census(cfg, partitions, StopAfter(5))
    assert census.partial
    assert census.partitions == 5
    assert 1 <= census.reached_ideals <= 5
    assert census.classes == {}


# ─── Muestreo a n=5 ───────────────────────────────────────────────────


@pytest.mark.slow
def test_sampled_sweep_at_five_is_bijective_and_commutes(container):
    cfg = SweepConfig.build(
        n=5,
        signature=(1, 2, 3, 4),
        selector="sample",
        sample_size=32,
        seed=7,
        weights=((1, 0, 0, 0),),
        suites=("degeneration", "kernel"),
    )
    certificate = container.verify_usecase.run(cfg)
    assert len(certificate.partitions) == 32
    assert len({p.partition for p in certificate.partitions}) == 32
    for report in certificate.partitions:
        degeneration = next(c for c in report.checks if c.name == "degeneration")
        assert all(degeneration.payload["bijective"].values())
        assert degeneration.payload["failed"] == 0
        assert next(c for c in report.checks if c.name == "kernel").passed
    assert certificate.passed
    assert certificate.census is None
