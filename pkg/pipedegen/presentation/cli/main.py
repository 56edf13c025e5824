"""
PipeDegen – CLI
================
Front end de línea de comandos.

Uso:
    python -m pipedegen ideals --n 4 --k 2
    python -m pipedegen pipedream --n 4 --subset "(1,1),(2,2),(1,2),(2,3),(1,4)"
    python -m pipedegen mcop --n 3 --order-part all --weight 1,1 --points
    python -m pipedegen degenerate --n 4 --signature 1,2,3 --order-part "(1,2),(1,4),(2,3)"
    python -m pipedegen verify --n 4 --signature 1,2,3 --all-partitions --output cert.json
    python -m pipedegen tableaux --n 4 --order-part "(1,2),(1,4),(2,3)" --weight 0,1,0
    python -m pipedegen rep-basis --n 4 --order-part none --weight 1,1,0
    python -m pipedegen semiinf --n 5 --k 3 --d-max 2 --order-extra "(1,4),(2,5),(3,6),(4,5)"
    python -m pipedegen report --format md --output report.md cert.json

Códigos de salida:
    0  todos los chequeos pasan
    1  algún chequeo falla
    2  error de configuración o de parseo
    3  presupuesto o capacidad agotados (resultado parcial)
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from pipedegen.application.dto.certificate_dto import SUITES, Certificate, SweepConfig
from pipedegen.container import Container, get_container
from pipedegen.domain.exceptions.domain_errors import (
    BudgetExceededError,
    CapacityError,
    ConfigurationError,
    DomainError,
    InvalidInputError,
    ParseError,
)
from pipedegen.domain.services.gt_poset import gt_poset
from pipedegen.domain.services.mcop_polytope import lattice_points, weyl_dim, xi_map
from pipedegen.domain.services.representation import leading_grade_check, monomial_basis_check
from pipedegen.domain.services.tableaux import enumerate_semistandard
from pipedegen.domain.value_objects.weight import Weight
from pipedegen.infrastructure.rendering.pipedream_renderer import FORMATS as RENDER_FORMATS, render_pipedream
from pipedegen.infrastructure.reporting.report_writer import FORMATS as REPORT_FORMATS
from pipedegen.presentation.cli.parsing import (
    parse_order_part,
    parse_pairs,
    parse_signature,
    parse_weight,
    parse_weights,
)
from pipedegen.shared.logging.logger import get_logger, log_banner, setup_logging

logger = get_logger("presentation.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_PARTIAL = 3


def exit_code_for(certificate: Certificate) -> int:
    """Un fallo definitivo domina sobre un resultado parcial."""
    if certificate.failed:
        return EXIT_FAILED
    if certificate.partial:
        return EXIT_PARTIAL
    return EXIT_OK


def _emit(container: Container, certificate: Certificate, output: str | None) -> int:
    if output:
        container.certificate_store.save(certificate, output)
    else:
        sys.stdout.write(container.certificate_store.dumps(certificate))
    return exit_code_for(certificate)


def _print_json(data: dict) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _weight_for(text: str, n: int) -> Weight:
    lam = Weight(parse_weight(text))
    if lam.n != n:
        raise ConfigurationError(f"el peso {lam} no corresponde a n={n}", field="weight")
    return lam


# ─── Handlers ───────────────────────────────────────────────────────────


def cmd_ideals(args: argparse.Namespace, container: Container) -> int:
    poset = gt_poset(args.n)
    ks = [args.k] if args.k is not None else list(range(1, args.n))
    data = {}
    for k in ks:
        if not 1 <= k <= args.n - 1:
            raise InvalidInputError(f"k={k} fuera de [1,{args.n - 1}]", field="k", value=k)
        ideals = poset.ideals(k)
        data[str(k)] = {"count": len(ideals), "ideals": [J.label() for J in ideals]}
    _print_json({"n": args.n, "ideals": data})
    return EXIT_OK


def cmd_pipedream(args: argparse.Namespace, container: Container) -> int:
    text = render_pipedream(parse_pairs(args.subset), args.n, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_mcop(args: argparse.Namespace, container: Container) -> int:
    oc = parse_order_part(args.order_part, args.n)
    lam = _weight_for(args.weight, args.n)
    points = sorted(lattice_points(oc, lam))
    expected = weyl_dim(lam)
    data = {
        "partition": oc.to_dict(),
        "weight": lam.to_dict(),
        "count": len(points),
        "weyl_dim": expected,
        "passed": len(points) == expected,
    }
    if args.points:
        xi = xi_map(oc)
        data["points"] = [list(p) for p in points]
        data["transformed_points"] = [list(p) for p in sorted(xi.apply(p) for p in points)]
        data["xi"] = xi.to_dict()
    _print_json(data)
    return EXIT_OK if data["passed"] else EXIT_FAILED


def _sweep_config(args: argparse.Namespace, container: Container, selector: str, suites: Sequence[str]) -> SweepConfig:
    signature = parse_signature(args.signature)
    if args.weights is None:
        weights = tuple(Weight.fundamental(args.n, k).a for k in signature)
    else:
        weights = parse_weights(args.weights)
    cfg_settings = container.settings
    return SweepConfig.build(
        n=args.n,
        signature=signature,
        selector=selector,
        order_part=args.order_part,
        weights=weights,
        suites=tuple(suites),
        budget_ms=args.budget_ms if args.budget_ms is not None else cfg_settings.budget_ms,
        workers=getattr(args, "workers", None) or cfg_settings.workers,
        sample_size=getattr(args, "sample_size", None) or cfg_settings.sample_size,
        seed=getattr(args, "seed", None) if getattr(args, "seed", None) is not None else cfg_settings.sample_seed,
        allow_large=getattr(args, "allow_large", False),
        output=args.output,
    )


def cmd_degenerate(args: argparse.Namespace, container: Container) -> int:
    cfg = _sweep_config(args, container, "single", ("degeneration", "kernel"))
    single = parse_order_part(args.order_part, args.n)
    certificate = container.verify_usecase.run(cfg, single, command="degenerate")
    return _emit(container, certificate, args.output)


def cmd_verify(args: argparse.Namespace, container: Container) -> int:
    if args.all_partitions:
        selector = "all"
    elif args.sample:
        selector = "sample"
    else:
        selector = "single"
    suites = args.suites.split(",") if args.suites else SUITES
    cfg = _sweep_config(args, container, selector, suites)
    single = parse_order_part(args.order_part, args.n) if selector == "single" else None

    log_banner(logger, "PipeDegen verify", n=cfg.n, d=cfg.signature, selector=selector)
    certificate = container.verify_usecase.run(cfg, single)
    return _emit(container, certificate, args.output)


def cmd_tableaux(args: argparse.Namespace, container: Container) -> int:
    oc = parse_order_part(args.order_part, args.n)
    lam = _weight_for(args.weight, args.n)
    tableaux = enumerate_semistandard(lam, oc)
    expected = weyl_dim(lam)
    lines = [f"{oc.label()}  λ={lam}: {len(tableaux)} tablas (dim V_λ = {expected})", ""]
    shown = tableaux if args.limit is None else tableaux[: args.limit]
    for tableau in shown:
        lines.append(tableau.render())
        lines.append("")
    sys.stdout.write("\n".join(lines))
    return EXIT_OK if len(tableaux) == expected else EXIT_FAILED


def cmd_rep_basis(args: argparse.Namespace, container: Container) -> int:
    oc = parse_order_part(args.order_part, args.n)
    lam = _weight_for(args.weight, args.n)
    basis = monomial_basis_check(oc, lam)
    grades = leading_grade_check(oc, lam)
    _print_json({"partition": oc.to_dict(), "basis": basis.to_dict(), "leading_grades": grades.to_dict()})
    return EXIT_OK if basis.passed and grades.passed else EXIT_FAILED


def cmd_semiinf(args: argparse.Namespace, container: Container) -> int:
    certificate = container.verify_usecase.run_semi_infinite(
        n=args.n,
        k=args.k,
        extra=parse_pairs(args.order_extra),
        d_max=args.d_max,
        horizon=args.horizon,
        pipe_trials=args.pipe_trials,
        seed=args.seed,
        budget_ms=args.budget_ms,
    )
    return _emit(container, certificate, args.output)


def cmd_report(args: argparse.Namespace, container: Container) -> int:
    text = container.report_usecase.emit(args.certificates, args.format, args.output)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK


# ─── Parser ─────────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipedegen",
        description="PipeDegen: degeneraciones tóricas, pipe dreams y MCOP en aritmética exacta",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideals", help="Ideales 𝒥_k del poset de Gelfand–Tsetlin")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(handler=cmd_ideals)

    p = sub.add_parser("pipedream", aliases=["render"], help="Dibuja el pipe dream de M ⊆ P")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", type=str, required=True, help='Lista "(i,j),(i,j),…"')
    p.add_argument("--format", choices=RENDER_FORMATS, default="ascii")
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(handler=cmd_pipedream)

    p = sub.add_parser("mcop", help="Puntos enteros del MCOP 𝒪_{O,C}(λ)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order-part", type=str, required=True)
    p.add_argument("--weight", type=str, required=True, help="Coeficientes a_1,…,a_{n−1}")
    p.add_argument("--points", action="store_true", help="Incluir los puntos y su imagen por ξ")
    p.set_defaults(handler=cmd_mcop)

    for name, handler in (("degenerate", cmd_degenerate), ("verify", cmd_verify)):
        p = sub.add_parser(name, help="Certificado de degeneración" if name == "degenerate" else "Barrido de chequeos")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--signature", type=str, required=True, help="Firma d, p. ej. 1,2,3")
        p.add_argument("--order-part", type=str, default=None, required=name == "degenerate")
        p.add_argument("--weights", type=str, default=None, help='Pesos λ separados por ";"')
        p.add_argument("--budget-ms", type=int, default=None)
        p.add_argument("--output", type=str, default=None)
        p.set_defaults(handler=handler)
        if name == "verify":
            group = p.add_mutually_exclusive_group()
            group.add_argument("--all-partitions", action="store_true")
            group.add_argument("--sample", action="store_true", help="Muestra aleatoria de particiones")
            p.add_argument("--sample-size", type=int, default=None)
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--workers", type=int, default=None)
            p.add_argument("--allow-large", action="store_true")
            p.add_argument("--suites", type=str, default=None, help=f"Subconjunto de {','.join(SUITES)}")

    p = sub.add_parser("tableaux", help="Tablas (O,C)-semiestándar de forma λ")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order-part", type=str, required=True)
    p.add_argument("--weight", type=str, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(handler=cmd_tableaux)

    p = sub.add_parser("rep-basis", help="Base monomial {f^c u} de V_λ")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order-part", type=str, required=True)
    p.add_argument("--weight", type=str, required=True)
    p.set_defaults(handler=cmd_rep_basis)

    p = sub.add_parser("semiinf", help="Verificación truncada del caso semi-infinito")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--order-extra", type=str, default="none", help='Elementos de O fuera de la diagonal')
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--pipe-trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(handler=cmd_semiinf)

    p = sub.add_parser("report", help="Agrega certificados en un reporte")
    p.add_argument("--format", choices=REPORT_FORMATS, default="md")
    p.add_argument("--output", type=str, default=None)
    p.add_argument("certificates", nargs="+")
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None, container: Container | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    container = container or get_container()
    setup_logging(container.settings.log_level)
    handler: Callable[[argparse.Namespace, Container], int] = args.handler
    try:
        return handler(args, container)
    except (ConfigurationError, ParseError, InvalidInputError) as exc:
        sys.stderr.write(json.dumps(exc.to_dict(), ensure_ascii=False) + "\n")
        return EXIT_CONFIG
    except (CapacityError, BudgetExceededError) as exc:
        sys.stderr.write(json.dumps(exc.to_dict(), ensure_ascii=False) + "\n")
        return EXIT_PARTIAL
    except DomainError as exc:
        logger.error(f"Error de dominio: {exc.message}")
        sys.stderr.write(json.dumps(exc.to_dict(), ensure_ascii=False) + "\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
