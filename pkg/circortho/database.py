"""
Base de datos SQLite espejo del catálogo.

El catálogo JSON Lines es la fuente de verdad; `search --db PATH` copia
además los registros en una tabla SQLite para consultarlos con SQL.

**Dependencias**: `sqlmodel`, `sqlalchemy`, `pathlib`

**Notas de Implementación**:
- **SQLite**: Un fichero local por catálogo, sin servidor
- **JSON Fields**: `record_json` guarda el registro completo como texto
- **Engines**: Se crean bajo demanda por ruta; ningún engine global al importar
"""
import json
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Union

from sqlalchemy.engine import Engine
from sqlalchemy.orm import sessionmaker
from sqlmodel import Session, SQLModel, create_engine, select

from circortho.config import DATABASE_PATH
from circortho.models import CatalogRecord, CatalogRow

_engines: Dict[str, Engine] = {}


def get_engine(path: Optional[Union[str, Path]] = None) -> Engine:
    """
    Engine SQLite para la ruta dada (default: CIRCORTHO_DB o data/circortho.db).

    Crea el directorio padre si no existe. echo=False desactiva el logging SQL.
    """
    target = Path(path or DATABASE_PATH)
    key = str(target.resolve())
    if key not in _engines:
        target.parent.mkdir(parents=True, exist_ok=True)
        _engines[key] = create_engine(f"sqlite:///{target}", echo=False)
    return _engines[key]


def init_db(engine: Engine) -> None:
    """Crea la tabla del catálogo si no existe (idempotente)."""
    SQLModel.metadata.create_all(engine)


def get_session(engine: Engine) -> Iterator[Session]:
    """
    Generador de sesiones que cierra la sesión al terminar.

    Yields:
        Session lista para usar
    """
    # autocommit=False: requiere commits explícitos
    factory = sessionmaker(bind=engine, class_=Session, autoflush=False)
    session = factory()
    try:
        yield session
    finally:
        session.close()


def save_records(records: List[CatalogRecord], path: Optional[Union[str, Path]] = None) -> int:
    """
    Inserta los registros en la tabla espejo.

    Args:
        records: Registros ya validados
        path: Ruta de la base de datos

    Returns:
        Número de filas insertadas
    """
    engine = get_engine(path)
    init_db(engine)
    for session in get_session(engine):
        for record in records:
            session.add(
                CatalogRow(
                    kind=record.kind,
                    n=record.n,
                    m=record.m,
                    d_squared=record.d_squared,
                    canonical_key=record.canonical_key,
                    record_json=json.dumps(record.model_dump(), sort_keys=True, ensure_ascii=False),
                )
            )
        session.commit()
    return len(records)


def load_records(
    path: Optional[Union[str, Path]] = None,
    kind: Optional[str] = None,
    n: Optional[int] = None,
) -> List[CatalogRecord]:
    """
    Lee registros de la tabla espejo, opcionalmente filtrados por tipo y orden.

    Returns:
        Registros en orden de inserción
    """
    engine = get_engine(path)
    init_db(engine)
    records: List[CatalogRecord] = []
    for session in get_session(engine):
        query = select(CatalogRow)
        if kind is not None:
            query = query.where(CatalogRow.kind == kind)
        if n is not None:
            query = query.where(CatalogRow.n == n)
        for row in session.exec(query.order_by(CatalogRow.id)):
            records.append(CatalogRecord.model_validate(json.loads(row.record_json)))
    return records
