"""Fixtures compartidas por los tests de circortho."""
import math
from pathlib import Path

import pytest

from circortho.appendix import load_appendix
from circortho.core import Generator
from circortho.event_logger import RunLogger

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def reproducible_env(monkeypatch):
    """Entorno fijo: un proceso, tolerancia por defecto y timestamp reproducible."""
    monkeypatch.setenv("CIRCORTHO_WORKERS", "1")
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    monkeypatch.delenv("CIRCORTHO_TOL", raising=False)
    monkeypatch.delenv("CIRCORTHO_INGEST_TOL", raising=False)


@pytest.fixture
def quiet_logger():
    return RunLogger(verbose=False)


@pytest.fixture
def appendix_path():
    return FIXTURES / "appendix.txt"


@pytest.fixture
def appendix_entries(appendix_path):
    return load_appendix(appendix_path)


@pytest.fixture
def omega3():
    return complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))


@pytest.fixture
def hadamard4():
    """circ_4(1, -i, 1, i): solución con d = 1."""
    return Generator.from_values([1, -1j, 1, 1j])


def entry_set(generators):
    """Conjunto de generadores redondeados, para comparar listas sin orden."""
    return {
        tuple((round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0) for v in g.entries)
        for g in generators
    }
