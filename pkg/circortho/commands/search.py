"""
Subcomando `search`: búsqueda espectral exhaustiva por orden.

Uso:
    circortho search --n 7
    circortho search --n 3..21 --workers 8 --out catalog.jsonl --db data/circortho.db
    circortho search --n 3..13 --format csv
"""
import argparse

from circortho.catalog import provenance, record_from_solution
from circortho.config import SEARCH_MAX_ORDER, SEARCH_MIN_ORDER
from circortho.core import DiagonalValue
from circortho.database import save_records
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.search import search_order
from circortho.utils import diagonal_frame, format_table_row

from circortho.commands.options import (
    add_format,
    add_out,
    add_tol,
    add_workers,
    echo,
    echo_frame,
    emit_records,
    parse_orders,
    resolve_workers,
)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("search", help="búsqueda exhaustiva de generadores hermíticos")
    parser.add_argument("--n", required=True, help="orden o rango A..B")
    parser.add_argument("--d-squared", default=None, help="restringir a la clase con este d² (p/q)")
    parser.add_argument("--db", default=None, help="copiar los registros en esta base SQLite")
    add_tol(parser)
    add_workers(parser)
    add_out(parser)
    add_format(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Ejecuta la búsqueda para cada orden y muestra la tabla de valores de d.

    Returns:
        0 si todo fue bien (los errores de argumentos se propagan)
    """
    orders = parse_orders(args.n)
    if orders[0] < SEARCH_MIN_ORDER or orders[-1] > SEARCH_MAX_ORDER:
        raise DomainError(f"el orden debe estar entre {SEARCH_MIN_ORDER} y {SEARCH_MAX_ORDER}")
    restrict = DiagonalValue.from_d_squared(args.d_squared) if args.d_squared else None
    workers = resolve_workers(args.workers)
    source = provenance(args.invocation)

    records = []
    rows = []
    table = []
    for n in orders:
        result = search_order(n, tol=args.tol, restrict_d=restrict, workers=workers, logger=logger)
        records.extend(record_from_solution(solution, source) for solution in result)
        table.append(format_table_row(n, result.distinct_d()))
        rows.extend((n, d) for d in result.distinct_d())

    emit_records(records, args.out, logger)
    if args.db:
        saved = save_records(records, args.db)
        logger.log(RunLogger.format_records_written(saved, args.db), "success")

    if args.format == "csv":
        echo_frame(diagonal_frame(rows), "csv")
        return 0
    echo("n | d")
    for line in table:
        echo(line)
    if rows:
        echo()
        echo_frame(diagonal_frame(rows), "text")
    return 0
