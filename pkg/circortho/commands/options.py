"""
Opciones y utilidades compartidas por los subcomandos.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pandas as pd

from circortho.catalog import write_catalog
from circortho.config import default_tol, default_workers
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.models import CatalogRecord


def parse_orders(text: str) -> List[int]:
    """
    Orden simple ("20") o rango inclusivo ("22..100").

    Raises:
        DomainError: Si el texto no es un orden o un rango válido

    Example:
        >>> parse_orders("3..7")
        [3, 4, 5, 6, 7]
    """
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError as exc:
        raise DomainError(f"orden no válido: {text!r}") from exc
    if low > high:
        raise DomainError(f"rango vacío: {text!r}")
    return list(range(low, high + 1))


def positive_float(text: str) -> float:
    """Tipo argparse para tolerancias."""
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"número no válido: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("la tolerancia debe ser positiva")
    return value


def add_tol(parser: argparse.ArgumentParser, default: Optional[float] = None) -> None:
    parser.add_argument(
        "--tol",
        type=positive_float,
        default=default,
        help=f"tolerancia (default: CIRCORTHO_TOL = {default_tol():g})",
    )


def add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="procesos en paralelo (default: CIRCORTHO_WORKERS o núcleos disponibles)",
    )


def add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="catálogo JSON Lines de salida")


def add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "csv"), default="text", help="formato de la tabla")


def echo_frame(frame: pd.DataFrame, fmt: str) -> None:
    """Imprime una tabla como texto alineado o como CSV."""
    if fmt == "csv":
        echo(frame.to_csv(index=False).rstrip("\n"))
    else:
        echo(frame.to_string(index=False))


def resolve_workers(value: Optional[int]) -> int:
    """Número de procesos pedido o el valor por defecto."""
    if value is None:
        return default_workers()
    if value < 1:
        raise DomainError("--workers debe ser ≥ 1")
    return value


def emit_records(records: Sequence[CatalogRecord], out: Optional[Path], logger: RunLogger) -> None:
    """Escribe los registros en --out si se indicó."""
    if out is None:
        return
    count = write_catalog(records, out)
    logger.log(RunLogger.format_records_written(count, str(out)), "success")


def command_line(argv: Sequence[str]) -> str:
    """Invocación como texto, para la procedencia."""
    return " ".join(["circortho", *argv])


def echo(text: str = "") -> None:
    """Salida de resultados por stdout."""
    print(text, file=sys.stdout)
