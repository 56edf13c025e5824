"""
PipeDegen – Logging configuration
==================================
Logging legible en stderr para barridos largos; stdout queda para los
resultados de la CLI. Las librerías de dominio solo registran, nunca imprimen.

    setup_logging(level)   instala (o reemplaza) el handler de pipedegen
    get_logger(name)       logger "pipedegen.<name>"
    log_banner(logger, …)  cabecera "=" * 60 de los comandos largos

DECISIONES DE DISEÑO:
    - El handler escribe en stderr, no en stdout: stdout transporta los
      certificados JSON y los diagramas que devuelve la CLI.
    - El handler lleva nombre propio para reemplazarlo sin tocar otros.
"""

from __future__ import annotations

import logging
import sys

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-30s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
_HANDLER_NAME = "pipedegen-stderr"
BANNER_WIDTH = 60


def setup_logging(level: int | str = logging.INFO) -> None:
    """
    Configura el root logger al arranque.

    Si ya existe el handler de pipedegen se reemplaza: cada llamada lo ata
    al sys.stderr vigente. Handlers ajenos (p. ej. los de pytest) se respetan.
    """
    if isinstance(level, str):
        level = level.upper()

    root = logging.getLogger()
    for existing in list(root.handlers):
        if existing.get_name() == _HANDLER_NAME:
            root.removeHandler(existing)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)

    # pyparsing registra cada gramática de pydotplus en DEBUG
    logging.getLogger("pyparsing").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Fábrica de loggers con namespace prefijado."""
    return logging.getLogger(f"pipedegen.{name}")


def log_banner(logger: logging.Logger, title: str, **fields: object) -> None:
    details = "  ".join(f"{key}={value}" for key, value in fields.items())
    logger.info("=" * BANNER_WIDTH)
    logger.info(f"  {title}  {details}".rstrip())
    logger.info("=" * BANNER_WIDTH)
