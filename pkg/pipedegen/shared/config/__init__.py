"""Configuration module."""
from pipedegen.shared.config.settings import settings, Settings

__all__ = ["settings", "Settings"]
