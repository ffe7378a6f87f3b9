"""
Subcomando `verify`: vuelve a verificar un catálogo JSON Lines o un texto tipo apéndice.

Uso:
    circortho verify catalog.jsonl
    circortho verify appendix.txt --tol 1e-4 --format csv
"""
import argparse
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

from circortho.appendix import looks_like_appendix, parse_appendix
from circortho.catalog import looks_like_catalog, numbered_records, reverify_record
from circortho.config import default_ingest_tol
from circortho.errors import CatalogParseError
from circortho.event_logger import RunLogger
from circortho.spectral import verify_conditions
from circortho.utils import format_surd

from circortho.commands.options import add_format, add_tol, echo_frame

COLUMNS = ["line", "kind", "n", "d", "residual", "passes", "detail"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="verifica generadores de un catálogo o apéndice")
    parser.add_argument("file", type=Path, help="catálogo JSON Lines o texto tipo apéndice")
    add_format(parser)
    add_tol(parser)
    parser.set_defaults(handler=run)


def _appendix_rows(text: str, tol: float) -> List[Dict[str, Any]]:
    rows = []
    for entry in parse_appendix(text):
        report = verify_conditions(entry.generator, entry.d, tol)
        rows.append(
            {
                "line": entry.line_number,
                "kind": "appendix",
                "n": entry.n,
                "d": format_surd(entry.d),
                "residual": max(report.gram_residual, report.unimodularity_residual, report.diagonal_residual),
                "passes": report.passes,
                "detail": "" if report.passes else "condiciones no satisfechas",
            }
        )
    return rows


def _catalog_rows(text: str, tol: Any) -> List[Dict[str, Any]]:
    rows = []
    for line_number, record in numbered_records(text):
        check = reverify_record(record, tol)
        rows.append(
            {
                "line": line_number,
                "kind": record.kind,
                "n": record.n,
                "d": record.d_squared,
                "residual": check.residual,
                "passes": check.passes,
                "detail": check.detail,
            }
        )
    return rows


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Verifica cada registro e imprime sus residuos.

    Returns:
        0 si todos pasan, 1 si alguno falla

    Raises:
        CatalogParseError: Si el fichero no se puede interpretar (código 4)
        OSError: Si el fichero no se puede leer (código 3)
    """
    text = args.file.read_text(encoding="utf-8")
    if looks_like_catalog(text):
        rows = _catalog_rows(text, args.tol)
    elif looks_like_appendix(text):
        rows = _appendix_rows(text, args.tol or default_ingest_tol())
    else:
        raise CatalogParseError("formato no reconocido (ni JSON Lines ni bloques 'n = …, d = …')", 1)

    for row in rows:
        label = f"línea {row['line']} (n={row['n']})"
        logger.log(RunLogger.format_verify_result(label, row["passes"], row["residual"]),
                   "success" if row["passes"] else "error")

    frame = pd.DataFrame(rows, columns=COLUMNS)
    echo_frame(frame, args.format)
    return 0 if all(row["passes"] for row in rows) else 1
