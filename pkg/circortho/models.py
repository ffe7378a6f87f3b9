"""
Modelos de datos del catálogo usando SQLModel.

Este módulo contiene dos modelos:
    - CatalogRecord: registro del catálogo JSON Lines; se valida al leer y al
      escribir cada línea
    - CatalogRow: fila de la tabla SQLite espejo del catálogo

Notas de implementación:
    - CatalogRecord no es tabla: SQLModel actúa como modelo Pydantic
    - En CatalogRow los campos con JSON se guardan como texto (record_json)
    - kind ∈ {complex, quaternary, zm, mub}; m solo se usa con zm

Dependencias:
    - sqlmodel: Modelos con validación de tipos y tablas ORM
    - sqlalchemy: Tipo Text para la columna JSON
"""
from typing import Any, Dict, List, Optional

from pydantic import field_validator
from sqlalchemy import Column, Text
from sqlmodel import Field, SQLModel

from circortho.config import CATALOG_SCHEMA_VERSION

RECORD_KINDS = ("complex", "quaternary", "zm", "mub")


class CatalogRecord(SQLModel):
    """
    Registro del catálogo de resultados.

    Attributes:
        schema_version: Versión del formato
        kind: "complex", "quaternary", "zm" o "mub"
        n: Orden
        m: Módulo (solo kind = "zm")
        d_squared: d² como "p/q" (para zm, d como entero de Z_m)
        generator: Pares [re, im] o enteros (zm)
        residuals: Campos de VerificationReport (o {"passes": ...} para zm)
        tol: Tolerancia con la que se verificó
        provenance: Comando, parámetros y timestamp
        canonical_key: Clave canónica en hexadecimal
        bases: Bases de la terna por columnas (solo kind = "mub")
    """

    schema_version: int = CATALOG_SCHEMA_VERSION
    kind: str
    n: int
    m: Optional[int] = None
    d_squared: str
    generator: List[Any]
    residuals: Dict[str, Any] = Field(default_factory=dict)
    tol: float
    provenance: str = ""
    canonical_key: str = ""
    bases: Optional[List[List[List[float]]]] = None

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, value: str) -> str:
        if value not in RECORD_KINDS:
            raise ValueError(f"tipo de registro desconocido: {value}")
        return value

    @field_validator("n")
    @classmethod
    def _positive_order(cls, value: int) -> int:
        if value < 1:
            raise ValueError("el orden n debe ser ≥ 1")
        return value


class CatalogRow(SQLModel, table=True):
    """
    Fila de la tabla espejo del catálogo.

    Attributes:
        id: ID autoincremental, clave primaria (None antes de insertar)
        kind: Tipo de registro
        n: Orden
        m: Módulo (zm)
        d_squared: d² como texto
        canonical_key: Clave canónica en hexadecimal
        record_json: Registro completo serializado como JSON
    """

    __tablename__ = "catalog"

    id: Optional[int] = Field(default=None, primary_key=True)
    kind: str = Field(index=True)
    n: int = Field(index=True)
    m: Optional[int] = None
    d_squared: str
    canonical_key: str = ""
    record_json: str = Field(sa_column=Column(Text, nullable=False))
