"""
PipeDegen – Verify Use Case
============================
Orquesta los chequeos de un barrido (partición × λ) y arma el certificado.

DECISIONES DE DISEÑO:
    - Cada partición es una celda independiente: `run_partition_cell` es
      una función de módulo (serializable para ProcessPoolExecutor).
    - El reduce respeta el orden de las particiones, así el certificado no
      depende de la cantidad de workers.
    - Presupuesto y capacidad se reportan por chequeo: el primero que se
      agota marca como parciales los que quedan en la celda.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from pipedegen import __version__
from pipedegen.application.dto.certificate_dto import (
    CensusReport,
    Certificate,
    CheckResult,
    PartitionReport,
    SweepConfig,
)
from pipedegen.domain.exceptions.domain_errors import (
    BudgetExceededError,
    CapacityError,
    ConfigurationError,
    DomainError,
)
from pipedegen.domain.services.degeneration import check_generators, psi_is_bijective, sagbi_count_check
from pipedegen.domain.services.mcop_polytope import integer_points_ineq, lattice_points, weyl_dim
from pipedegen.domain.services.monomial_order import variable_order
from pipedegen.domain.services.representation import monomial_basis_check
from pipedegen.domain.services.semi_infinite import pipe_value_failures, q_window, verify_semi_infinite
from pipedegen.domain.services.tableaux import enumerate_semistandard, is_oc_semistandard
from pipedegen.domain.services.toric_kernel import CENSUS_ASSUMPTION, kernels_agree, orbit_census
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.poset_element import off_diagonal_elements
from pipedegen.domain.value_objects.q_element import QElement, QPartition
from pipedegen.domain.value_objects.weight import Weight
from pipedegen.shared.config.settings import Settings, settings as default_settings
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("application.verify")

CheckOutcome = tuple[bool, dict]


# ─── Chequeos por celda ─────────────────────────────────────────────────


def _degeneration(oc: OCPartition, signature: Sequence[int], deadline: Deadline) -> CheckOutcome:
    checks = check_generators(oc, signature, deadline)
    bijective = {str(k): psi_is_bijective(oc, k) for k in signature}
    passed = all(bijective.values()) and all(c.passed for c in checks)
    return passed, {
        "order": variable_order(oc).to_dict(),
        "bijective": bijective,
        "failed": sum(1 for c in checks if not c.passed),
        "generators": [c.to_dict() for c in checks],
    }


def _kernel(oc: OCPartition, signature: Sequence[int], deadline: Deadline) -> CheckOutcome:
    agree = kernels_agree(oc, signature)
    return agree, {"degree2_agree": agree}


def _sagbi(oc: OCPartition, lam: Weight, deadline: Deadline) -> CheckOutcome:
    cert = sagbi_count_check(oc, lam, deadline)
    return cert.passed, cert.to_dict()


def _polytope(oc: OCPartition, lam: Weight, deadline: Deadline) -> CheckOutcome:
    points = lattice_points(oc, lam, deadline)
    by_inequalities = integer_points_ineq(oc, lam, deadline)
    expected = weyl_dim(lam)
    agrees = points == by_inequalities
    return len(points) == expected and agrees, {
        "count": len(points),
        "expected": expected,
        "inequalities_agree": agrees,
    }


def _tableaux(oc: OCPartition, lam: Weight, deadline: Deadline) -> CheckOutcome:
    tableaux = enumerate_semistandard(lam, oc, deadline)
    expected = weyl_dim(lam)
    semistandard = all(is_oc_semistandard(t, oc) for t in tableaux)
    return len(tableaux) == expected and semistandard, {
        "count": len(tableaux),
        "expected": expected,
        "all_semistandard": semistandard,
    }


def _basis(oc: OCPartition, lam: Weight, deadline: Deadline) -> CheckOutcome:
    cert = monomial_basis_check(oc, lam, deadline)
    return cert.passed, cert.to_dict()


PARTITION_CHECKS: dict[str, Callable[[OCPartition, Sequence[int], Deadline], CheckOutcome]] = {
    "degeneration": _degeneration,
    "kernel": _kernel,
}
WEIGHT_CHECKS: dict[str, Callable[[OCPartition, Weight, Deadline], CheckOutcome]] = {
    "sagbi": _sagbi,
    "polytope": _polytope,
    "tableaux": _tableaux,
    "basis": _basis,
}


def run_partition_cell(
    n: int,
    order_mask: int,
    signature: tuple[int, ...],
    weights: tuple[tuple[int, ...], ...],
    suites: tuple[str, ...],
    deadline: Deadline,
    record_timings: bool = False,
) -> PartitionReport:
    """Todos los chequeos de una partición, en orden fijo."""
    oc = OCPartition(n, order_mask)
    report = PartitionReport(
        partition=oc.to_hex(),
        label=oc.label(),
        order_part=[p.to_dict() for p in sorted(oc.order_part)],
    )
    plan: list[tuple[str, list[int] | None, Callable[[], CheckOutcome]]] = []
    for name, check in PARTITION_CHECKS.items():
        if name in suites:
            plan.append((name, None, lambda check=check: check(oc, signature, deadline)))
    for name, check in WEIGHT_CHECKS.items():
        if name not in suites:
            continue
        for a in weights:
            lam = Weight(a)
            plan.append((name, list(a), lambda check=check, lam=lam: check(oc, lam, deadline)))

    stopped: dict | None = None
    for name, weight, run in plan:
        if stopped is not None:
            report.checks.append(CheckResult(name=name, weight=weight, passed=False, partial=True, error=stopped))
            continue
        try:
            passed, payload = run()
        except (BudgetExceededError, CapacityError) as exc:
            stopped = exc.to_dict()
            logger.warning(f"{oc.label()} {name}: resultado parcial ({exc.code})")
            report.checks.append(CheckResult(name=name, weight=weight, passed=False, partial=True, error=stopped))
            continue
        except DomainError as exc:
            logger.error(f"{oc.label()} {name} λ={weight}: FALLA ({exc.code}: {exc.message})")
            report.checks.append(CheckResult(name=name, weight=weight, passed=False, error=exc.to_dict()))
            continue
        if not passed:
            logger.error(f"{oc.label()} {name} λ={weight}: FALLA")
        report.checks.append(CheckResult(name=name, weight=weight, passed=passed, payload=payload))
    if record_timings:
        report.timing_ms = deadline.elapsed_ms
    return report


def random_q_subsets(
    n: int,
    k: int,
    trials: int,
    seed: int,
    max_size: int = 6,
) -> list[tuple[QElement, ...]]:
    """Subconjuntos finitos de Q (filas ≤ 2k) para el chequeo de valores de tuberías; deterministas dada la semilla."""
    window = q_window(n, k, 2 * k)
    rng = np.random.default_rng(seed)
    subsets = []
    for _ in range(trials):
        size = int(rng.integers(0, min(max_size, len(window)) + 1))
        picks = sorted(int(i) for i in rng.choice(len(window), size=size, replace=False))
        subsets.append(tuple(window[i] for i in picks))
    return subsets


# ─── Caso de uso ────────────────────────────────────────────────────────


class VerifyUseCase:
    """
    Caso de uso: verificar las degeneraciones de un barrido.

    Selecciona particiones, reparte las celdas (en línea o en un pool de
    procesos), reduce en orden y agrega el censo cuando corresponde.
    """

    def __init__(self, settings: Settings | None = None):
        self._settings = settings or default_settings

    # ─── Selección de particiones ───────────────────────────────────────

    def select_partitions(self, cfg: SweepConfig, single: OCPartition | None = None) -> list[OCPartition]:
        if cfg.selector == "single":
            if single is None:
                raise ConfigurationError("selector 'single' sin partición", field="order_part")
            return [single]
        if cfg.selector == "all":
            if cfg.n > self._settings.max_exhaustive_n and not cfg.allow_large:
                raise ConfigurationError(
                    f"n={cfg.n} supera max_exhaustive_n={self._settings.max_exhaustive_n}; use --allow-large",
                    field="n",
                )
            return list(OCPartition.all_partitions(cfg.n))
        total = 1 << len(off_diagonal_elements(cfg.n))
        rng = np.random.default_rng(cfg.seed)
        size = min(cfg.sample_size, total)
        masks = sorted(int(m) for m in rng.choice(total, size=size, replace=False))
        return [OCPartition(cfg.n, mask) for mask in masks]

    # ─── Ejecución ──────────────────────────────────────────────────────

    def _cells(
        self,
        cfg: SweepConfig,
        partitions: Sequence[OCPartition],
        deadline: Deadline,
    ) -> list[PartitionReport]:
        args = [
            (cfg.n, oc.order_mask, cfg.signature, cfg.weights, cfg.suites, deadline, self._settings.record_timings)
            for oc in partitions
        ]
        if cfg.workers == 1 or len(args) <= 1:
            return [run_partition_cell(*a) for a in args]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(run_partition_cell, *a) for a in args]
            return [f.result() for f in futures]

    def _census(
        self,
        cfg: SweepConfig,
        partitions: Iterable[OCPartition],
        deadline: Deadline,
    ) -> CensusReport:
        try:
            result = orbit_census(cfg.n, cfg.signature, partitions, deadline)
        except BudgetExceededError as exc:
            logger.warning("Censo interrumpido por presupuesto")
            return CensusReport(
                n=cfg.n,
                signature=list(cfg.signature),
                partitions=exc.partial.get("partitions_done", 0),
                distinct_ideals=0,
                orbits=0,
                reached_ideals=exc.partial.get("distinct_so_far", 0),
                classes={},
                assumption=CENSUS_ASSUMPTION,
                partial=True,
            )
        return CensusReport(**result.to_dict())

    def run(
        self,
        cfg: SweepConfig,
        single: OCPartition | None = None,
        command: str = "verify",
    ) -> Certificate:
        """run_verify: ejecuta las suites elegidas y devuelve el certificado."""
        deadline = Deadline.start(cfg.budget_ms)
        partitions = self.select_partitions(cfg, single)
        logger.info(
            f"verify n={cfg.n} d={cfg.signature}: {len(partitions)} particiones, "
            f"{len(cfg.weights)} pesos, workers={cfg.workers}"
        )
        reports = self._cells(cfg, partitions, deadline)
        census = None
        if "census" in cfg.suites and cfg.selector == "all":
            census = self._census(cfg, partitions, deadline)

        certificate = Certificate(
            version=__version__,
            schema_version=self._settings.certificate_schema_version,
            command=command,
            config=cfg.model_dump(mode="json", exclude={"output", "workers"}),
            partitions=reports,
            census=census,
            timings={"total_ms": deadline.elapsed_ms} if self._settings.record_timings else None,
        )
        summary = certificate.summary()
        logger.info(
            f"verify terminado: {summary['checks']} chequeos, {summary['failed']} fallidos, "
            f"{summary['partial']} parciales"
        )
        return certificate

    # ─── Semi-infinito ──────────────────────────────────────────────────

    def run_semi_infinite(
        self,
        n: int,
        k: int,
        extra: Sequence[tuple[int, int]],
        d_max: int | None = None,
        horizon: int | None = None,
        pipe_trials: int = 0,
        seed: int = 0,
        budget_ms: int | None = None,
    ) -> Certificate:
        bound = d_max if d_max is not None else self._settings.semiinf_d_max
        rows = horizon if horizon is not None else self._settings.semiinf_horizon
        O = QPartition.build(n, k, extra, rows)
        deadline = Deadline.start(budget_ms if budget_ms is not None else self._settings.budget_ms)
        report = PartitionReport(
            partition=f"n={n},k={k}",
            label="O=diag∪{" + ",".join(QElement(*p).label() for p in sorted(O.extra)) + "}",
            order_part=[list(p) for p in sorted(O.extra)],
        )
        try:
            cert = verify_semi_infinite(O, bound, deadline)
            report.checks.append(CheckResult(name="semiinf", passed=cert.passed, payload=cert.to_dict()))
        except (BudgetExceededError, CapacityError) as exc:
            report.checks.append(CheckResult(name="semiinf", passed=False, partial=True, error=exc.to_dict()))
        except DomainError as exc:
            logger.error(f"semiinf: FALLA ({exc.code}: {exc.message})")
            report.checks.append(CheckResult(name="semiinf", passed=False, error=exc.to_dict()))
        if pipe_trials:
            subsets = random_q_subsets(n, k, pipe_trials, seed)
            failures = [f for M in subsets for f in pipe_value_failures(M, n, k)]
            report.checks.append(
                CheckResult(
                    name="semiinf_pipe_values",
                    passed=not failures,
                    payload={"subsets": len(subsets), "failures": failures[:20]},
                )
            )
        config = {
            "n": n,
            "k": k,
            "d_max": bound,
            "horizon": rows,
            "order_extra": [list(p) for p in sorted(O.extra)],
            "expected_per_level": math.comb(n, k),
        }
        return Certificate(
            version=__version__,
            schema_version=self._settings.certificate_schema_version,
            command="semiinf",
            config=config,
            partitions=[report],
            timings={"total_ms": deadline.elapsed_ms} if self._settings.record_timings else None,
        )
