import os
from datetime import datetime, timezone

from circortho import config


def test_default_tolerances():
    assert config.default_tol() == 1e-9
    assert config.default_ingest_tol() == 1e-4


def test_tolerances_from_environment(monkeypatch):
    monkeypatch.setenv("CIRCORTHO_TOL", "1e-6")
    monkeypatch.setenv("CIRCORTHO_INGEST_TOL", "0.001")
    assert config.default_tol() == 1e-6
    assert config.default_ingest_tol() == 1e-3


def test_invalid_tolerance_falls_back(monkeypatch):
    monkeypatch.setenv("CIRCORTHO_TOL", "abc")
    assert config.default_tol() == config.DEFAULT_TOL
    monkeypatch.setenv("CIRCORTHO_TOL", "-1")
    assert config.default_tol() == config.DEFAULT_TOL


def test_workers(monkeypatch):
    assert config.default_workers() == 1
    monkeypatch.setenv("CIRCORTHO_WORKERS", "0")
    assert config.default_workers() == max(1, os.cpu_count() or 1)
    monkeypatch.delenv("CIRCORTHO_WORKERS")
    assert config.default_workers() >= 1


def test_provenance_timestamp(monkeypatch):
    assert config.provenance_timestamp() == "2023-11-14T22:13:20+00:00"
    monkeypatch.delenv("SOURCE_DATE_EPOCH")
    moment = datetime(2024, 1, 2, 3, 4, 5, tzinfo=timezone.utc)
    assert config.provenance_timestamp(moment) == "2024-01-02T03:04:05+00:00"
