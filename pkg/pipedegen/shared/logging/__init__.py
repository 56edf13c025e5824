"""Logging module."""
from pipedegen.shared.logging.logger import get_logger, log_banner, setup_logging

__all__ = ["setup_logging", "get_logger", "log_banner"]
