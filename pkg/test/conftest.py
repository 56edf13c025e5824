"""
Fixtures compartidas y perfiles de hypothesis.

    HYPOTHESIS_PROFILE=ci   → menos ejemplos, sin deadline
    HYPOTHESIS_PROFILE=dev  → perfil por defecto
"""

from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from pipedegen.container import Container
from pipedegen.domain.value_objects.oc_partition import OCPartition
from pipedegen.domain.value_objects.q_element import QPartition
from pipedegen.shared.config.settings import Settings

hypothesis_settings.register_profile(
    "ci", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.register_profile("dev", max_examples=100, deadline=None)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


# Partición de los ejemplos de r(i,j), σ_i y tablas a n=4
EXAMPLE_ORDER_PART = [(1, 2), (1, 4), (2, 3)]

# Conjunto de la figura de tuberías a n=4
EXAMPLE_PIPE_SET = [(1, 1), (2, 2), (1, 2), (2, 3), (1, 4)]

# Partición semi-infinita de ejemplo (n=5, k=3)
EXAMPLE_Q_EXTRA = [(1, 4), (2, 5), (3, 6), (4, 5)]


@pytest.fixture
def example_oc() -> OCPartition:
    return OCPartition.from_elements(4, EXAMPLE_ORDER_PART)


@pytest.fixture
def example_q() -> QPartition:
    return QPartition.build(5, 3, EXAMPLE_Q_EXTRA, horizon=12)


@pytest.fixture
def container() -> Container:
    """Contenedor aislado con configuración por defecto (sin tiempos)."""
    return Container(settings=Settings(record_timings=False, workers=1))
