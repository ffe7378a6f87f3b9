"""
Catálogo de resultados en formato JSON Lines.

Cada línea es un objeto JSON con las claves ordenadas, validado con
`CatalogRecord`. El catálogo guarda soluciones complejas, formas
cuaternarias, generadores sobre Z_m y ternas de MUB; todo registro se puede
volver a verificar a partir de su propio contenido.

Estructura de un registro:
    {
        "schema_version": 1,
        "kind": "complex" | "quaternary" | "zm" | "mub",
        "n": int,
        "m": int | null,
        "d_squared": "p/q",
        "generator": [[re, im], ...] | [ints],
        "residuals": {...},
        "tol": float,
        "provenance": "comando parámetros @ timestamp",
        "canonical_key": "hex",
        "bases": [[[re, im], ...], ...] | null
    }

Dependencias:
    - json: Serialización determinista (sort_keys)
    - pydantic: Errores de validación de CatalogRecord
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Optional, Tuple, Union

from pydantic import ValidationError

from circortho.config import CATALOG_SCHEMA_VERSION, provenance_timestamp
from circortho.core import DiagonalValue, Generator, rational_to_str
from circortho.errors import BasisRejectedError, CatalogParseError, UnbiasedPairError
from circortho.models import CatalogRecord
from circortho.mub import Basis, assemble_triple, basis_from_column_major, basis_to_column_major, unbiased_residual
from circortho.ringzm import ZmGenerator, verify_zm
from circortho.search import Solution, canonical_key
from circortho.spectral import VerificationReport, verify_conditions


@dataclass(frozen=True)
class RecordCheck:
    """
    Resultado de volver a verificar un registro.

    Attributes:
        record: Registro comprobado
        passes: True si el registro sigue cumpliendo sus condiciones
        residual: Residuo máximo (0 para zm)
        detail: Texto breve con el motivo del fallo
    """

    record: CatalogRecord
    passes: bool
    residual: float
    detail: str = ""


def provenance(command: str, timestamp: Optional[str] = None) -> str:
    """Texto de procedencia: comando con parámetros y timestamp."""
    return f"{command} @ {timestamp or provenance_timestamp()}"


# ===== CONSTRUCCIÓN DE REGISTROS =====


def record_from_generator(
    kind: str,
    generator: Generator,
    d: DiagonalValue,
    report: VerificationReport,
    source: str,
    key: Optional[bytes] = None,
) -> CatalogRecord:
    """
    Registro para un generador complejo o cuaternario ya verificado.

    Args:
        kind: "complex" o "quaternary"
        generator: Generador
        d: Valor diagonal exacto
        report: Informe de verificación
        source: Texto de procedencia
        key: Clave canónica (default: se calcula)
    """
    if key is None:
        key = canonical_key(generator, report.tol)
    return CatalogRecord(
        schema_version=CATALOG_SCHEMA_VERSION,
        kind=kind,
        n=generator.n,
        d_squared=rational_to_str(d.d_squared),
        generator=generator.to_pairs(),
        residuals=report.to_dict(),
        tol=report.tol,
        provenance=source,
        canonical_key=key.hex(),
    )


def record_from_solution(solution: Solution, source: str) -> CatalogRecord:
    """Registro de una solución de `search_order`."""
    return record_from_generator(
        "complex", solution.generator, solution.d, solution.residuals, source, solution.canonical_key
    )


def record_from_zm(g: ZmGenerator, source: str) -> CatalogRecord:
    """Registro de un generador sobre Z_m (d se guarda como elemento de Z_m)."""
    key = ",".join(str(v) for v in (g.m,) + g.entries).encode("ascii")
    return CatalogRecord(
        schema_version=CATALOG_SCHEMA_VERSION,
        kind="zm",
        n=g.n,
        m=g.m,
        d_squared=str(g.d),
        generator=list(g.entries),
        residuals={"passes": verify_zm(g)},
        tol=0.0,
        provenance=source,
        canonical_key=key.hex(),
    )


def record_from_triple(
    generator: Generator,
    bases: Tuple[Basis, Basis, Basis],
    tol: float,
    source: str,
) -> CatalogRecord:
    """Registro de una terna de MUB construida a partir de `generator`."""
    residual = max(
        unbiased_residual(bases[i], bases[j]) for i, j in ((0, 1), (0, 2), (1, 2))
    )
    d_squared = abs(generator.entries[0]) ** 2
    return CatalogRecord(
        schema_version=CATALOG_SCHEMA_VERSION,
        kind="mub",
        n=generator.n,
        d_squared=rational_to_str(DiagonalValue.from_d_squared(round(d_squared)).d_squared),
        generator=generator.to_pairs(),
        residuals={"unbiased_residual": residual, "passes": residual <= tol},
        tol=tol,
        provenance=source,
        canonical_key=canonical_key(generator, tol).hex(),
        bases=[basis_to_column_major(basis) for basis in bases],
    )


# ===== LECTURA Y ESCRITURA =====


def dumps_record(record: CatalogRecord) -> str:
    """Una línea JSON con claves ordenadas (sin salto de línea)."""
    return json.dumps(record.model_dump(), sort_keys=True, ensure_ascii=False)


def write_catalog(records: Iterable[CatalogRecord], target: Union[str, Path, IO[str]]) -> int:
    """
    Escribe los registros como JSON Lines UTF-8.

    Args:
        records: Registros a escribir
        target: Ruta o flujo de texto abierto

    Returns:
        Número de registros escritos

    Raises:
        OSError: Si la ruta no se puede escribir
    """
    lines = [dumps_record(CatalogRecord.model_validate(record.model_dump())) for record in records]
    content = "".join(line + "\n" for line in lines)
    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
    else:
        target.write(content)
    return len(lines)


def numbered_records(text: str) -> List[Tuple[int, CatalogRecord]]:
    """
    Interpreta un texto JSON Lines conservando el número de línea de cada registro.

    Las líneas en blanco se saltan pero cuentan para la numeración.

    Returns:
        Pares (línea, registro) en orden de aparición

    Raises:
        CatalogParseError: Con el número de línea del primer registro inválido
    """
    records = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append((line_number, CatalogRecord.model_validate(json.loads(line))))
        except json.JSONDecodeError as exc:
            raise CatalogParseError(f"JSON inválido: {exc.msg}", line_number) from exc
        except ValidationError as exc:
            raise CatalogParseError(f"registro inválido: {exc.error_count()} errores", line_number) from exc
    return records


def parse_catalog(text: str) -> List[CatalogRecord]:
    """Interpreta un texto JSON Lines."""
    return [record for _, record in numbered_records(text)]


def read_catalog(path: Union[str, Path]) -> List[CatalogRecord]:
    """Lee un catálogo JSON Lines UTF-8."""
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def looks_like_catalog(text: str) -> bool:
    """True si la primera línea útil parece un objeto JSON."""
    for line in text.splitlines():
        if line.strip():
            return line.lstrip().startswith("{")
    return False


# ===== VERIFICACIÓN =====


def reverify_record(record: CatalogRecord, tol: Optional[float] = None) -> RecordCheck:
    """
    Vuelve a verificar un registro con la tolerancia indicada o la suya propia.

    Args:
        record: Registro a comprobar
        tol: Tolerancia (default: la guardada en el registro)

    Returns:
        RecordCheck con el resultado
    """
    tolerance = tol if tol is not None else record.tol
    try:
        if record.kind == "zm":
            g = ZmGenerator(record.m or 0, record.n, int(record.d_squared), tuple(record.generator[1:]))
            passes = verify_zm(g)
            return RecordCheck(record, passes, 0.0, "" if passes else "C·C^T no es escalar mod m")

        generator = Generator.from_pairs(record.generator)
        if generator.n != record.n:
            return RecordCheck(record, False, float("inf"), "n no coincide con el generador")
        if record.kind == "mub":
            assemble_triple(generator, tolerance)
            stored = [basis_from_column_major(record.n, pairs) for pairs in record.bases or []]
            residual = max(
                (unbiased_residual(stored[i], stored[j]) for i in range(len(stored)) for j in range(i + 1, len(stored))),
                default=0.0,
            )
            passes = len(stored) == 3 and residual <= tolerance
            return RecordCheck(record, passes, residual, "" if passes else "bases guardadas no MU")

        report = verify_conditions(generator, DiagonalValue.from_d_squared(record.d_squared), tolerance)
        residual = max(report.gram_residual, report.unimodularity_residual, report.diagonal_residual)
        return RecordCheck(record, report.passes, residual, "" if report.passes else "condiciones no satisfechas")
    except UnbiasedPairError as exc:
        return RecordCheck(record, False, exc.residual, str(exc))
    except BasisRejectedError as exc:
        return RecordCheck(record, False, exc.residual, str(exc))
    except ValueError as exc:
        return RecordCheck(record, False, float("inf"), str(exc))


def load_catalog(path: Union[str, Path], tol: Optional[float] = None) -> List[RecordCheck]:
    """Lee un catálogo y vuelve a verificar cada registro."""
    return [reverify_record(record, tol) for record in read_catalog(path)]
