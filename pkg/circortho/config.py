"""
Configuración global de circortho.

Constantes del proyecto y lectura de variables de entorno. Todos los valores
configurables se resuelven al importar el módulo; las funciones `default_*`
vuelven a leer el entorno para que los tests puedan usar `monkeypatch`.

Variables de entorno:
    - CIRCORTHO_TOL: Tolerancia por defecto para generadores calculados (1e-9)
    - CIRCORTHO_INGEST_TOL: Tolerancia para generadores leídos de texto con 6 decimales (1e-4)
    - CIRCORTHO_WORKERS: Número de procesos por defecto (os.cpu_count())
    - CIRCORTHO_DB: Ruta de la base de datos SQLite espejo del catálogo
    - SOURCE_DATE_EPOCH: Fija el timestamp de procedencia (salida reproducible)

Dependencias:
    - os: Lectura de variables de entorno
"""
import os
from datetime import datetime, timezone
from typing import Optional

# ===== TOLERANCIAS =====

DEFAULT_TOL: float = 1e-9  # Generadores calculados internamente
INGEST_TOL: float = 1e-4  # Generadores con 6 decimales (formato del apéndice)
BASIS_TOL: float = 1e-9  # Residuo de Gram admitido para una base

# ===== LÍMITES DE COSTE =====

SEARCH_MIN_ORDER: int = 2
SEARCH_MAX_ORDER: int = 26  # 2^(n-1) patrones
ORACLE_MAX_ORDER: int = 12  # Oráculo cuaternario por fuerza bruta
ZM_MAX_ORDER_SYMMETRIC: int = 24
ZM_MAX_ORDER_GENERAL: int = 16
ROWS_CHECK_MAX_ORDER: int = 64  # Hasta aquí se comprueban productos de filas explícitos
CLASSIFY_SEARCH_MAX_ORDER: int = 22  # Órdenes pares resueltos por búsqueda en `classify`

# Tamaño fijo de los rangos colex: no depende del número de procesos
SEARCH_CHUNK_SIZE: int = 1 << 15

# ===== CATÁLOGO =====

CATALOG_SCHEMA_VERSION: int = 1
DATABASE_DIR: str = "data"
DATABASE_PATH: str = os.getenv("CIRCORTHO_DB", f"{DATABASE_DIR}/circortho.db")


def _float_from_env(name: str, default: float) -> float:
    """
    Lee un real positivo de una variable de entorno.

    Args:
        name: Nombre de la variable
        default: Valor si la variable no existe o no es válida

    Returns:
        El valor leído o `default`
    """
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def default_tol() -> float:
    """Tolerancia por defecto (CIRCORTHO_TOL o 1e-9)."""
    return _float_from_env("CIRCORTHO_TOL", DEFAULT_TOL)


def default_ingest_tol() -> float:
    """Tolerancia para texto de 6 decimales (CIRCORTHO_INGEST_TOL o 1e-4)."""
    return _float_from_env("CIRCORTHO_INGEST_TOL", INGEST_TOL)


def default_workers() -> int:
    """
    Número de procesos por defecto.

    Returns:
        CIRCORTHO_WORKERS si es un entero positivo, si no `os.cpu_count()` (mínimo 1)
    """
    raw = os.getenv("CIRCORTHO_WORKERS")
    if raw:
        try:
            workers = int(raw)
            if workers > 0:
                return workers
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


def provenance_timestamp(now: Optional[datetime] = None) -> str:
    """
    Timestamp ISO para la procedencia de los registros del catálogo.

    Si SOURCE_DATE_EPOCH está definido se usa ese instante, de modo que dos
    invocaciones idénticas producen la misma salida byte a byte.

    Args:
        now: Instante a usar si no hay SOURCE_DATE_EPOCH (default: reloj actual)

    Returns:
        Fecha en formato ISO 8601, UTC
    """
    epoch = os.getenv("SOURCE_DATE_EPOCH")
    if epoch:
        try:
            return datetime.fromtimestamp(int(epoch), tz=timezone.utc).isoformat()
        except ValueError:
            pass
    moment = now or datetime.now(timezone.utc)
    return moment.isoformat()
