"""
Subcomando `classify`: filtros de existencia para pares (n, d).

Uso:
    circortho classify --n 20
    circortho classify --n 22..100
    circortho classify --d 4 --n-max 300
"""
import argparse
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Set, Tuple

from circortho.catalog import read_catalog
from circortho.core import DiagonalValue
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.feasibility import (
    STATUS_EXCLUDED,
    PairStatus,
    admissible_even_orders,
    classify_even_order,
    classify_pair,
    even_order_exceptions,
    integer_d_filter,
)
from circortho.search import spectrum_classes
from circortho.utils import format_surd

from circortho.commands.options import add_workers, echo, parse_orders, resolve_workers


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("classify", help="clasifica pares (n, d): exists, open o excluded")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--n", help="orden o rango A..B")
    target.add_argument("--d", type=int, help="d entero no negativo")
    parser.add_argument("--n-max", type=int, default=100, help="orden máximo con --d (default: 100)")
    parser.add_argument("--catalog", type=Path, default=None, help="catálogo con testigos de existencia")
    add_workers(parser)
    parser.set_defaults(handler=run)


def _witnesses(path: Optional[Path]) -> Set[Tuple[int, Fraction]]:
    if path is None:
        return set()
    return {
        (record.n, Fraction(record.d_squared))
        for record in read_catalog(path)
        if record.kind in ("complex", "quaternary")
    }


def _reasons(status: PairStatus) -> str:
    return ", ".join(rule for rule, _ in status.reasons)


def _describe(status: PairStatus) -> str:
    text = f"d = {format_surd(status.d)}: {status.status}"
    if status.status == STATUS_EXCLUDED and status.reasons:
        text += f" ({_reasons(status)})"
    return text


def _classify_order(n: int, witnesses: Set[Tuple[int, Fraction]], workers: int, logger: RunLogger) -> None:
    if n % 2 == 0:
        statuses = classify_even_order(n, witnesses=witnesses, workers=workers)
    else:
        statuses = [classify_pair(n, c.d, witnesses=witnesses, workers=workers) for c in spectrum_classes(n)]
    for status in statuses:
        echo(f"{n} | {_describe(status)}")
        logger.log(RunLogger.format_classify(n, format_surd(status.d), status.status))
        if n % 2 == 0 and status.d.exact_rational is not None and status.d.exact_rational.denominator == 1:
            verdict = integer_d_filter(n, int(status.d.exact_rational))
            for rule, text in verdict.reasons:
                echo(f"    {rule}: {text}")
    possible = [s for s in statuses if s.status != STATUS_EXCLUDED]
    if len(possible) == 1:
        echo(f"{n}: d = {format_surd(possible[0].d)} only")


def _classify_range(orders: List[int], witnesses: Set[Tuple[int, Fraction]], workers: int, logger: RunLogger) -> None:
    exceptions = even_order_exceptions(orders[0], orders[-1], logger)
    echo("n | d | estado")
    for n, d in exceptions:
        status = classify_pair(n, d, witnesses=witnesses, workers=workers)
        echo(f"{n} | {format_surd(d)} | {status.status}")
    logger.log(f"{len(exceptions)} excepciones con n par en [{orders[0]}, {orders[-1]}]")


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Imprime la clasificación pedida.

    Returns:
        0 (los argumentos inválidos se propagan como DomainError)
    """
    workers = resolve_workers(args.workers)
    witnesses = _witnesses(args.catalog)
    if args.d is not None:
        if args.d < 0:
            raise DomainError("d debe ser no negativo")
        d = DiagonalValue.from_rational(args.d)
        orders = admissible_even_orders(args.d, args.n_max)
        statuses = [classify_pair(n, d, witnesses=witnesses, workers=workers) for n in orders]
        echo("; ".join(f"{s.n}: {s.status}" for s in statuses))
        return 0

    orders = parse_orders(args.n)
    if orders[0] < 2:
        raise DomainError("el orden debe ser ≥ 2")
    if len(orders) == 1:
        _classify_order(orders[0], witnesses, workers, logger)
    else:
        _classify_range(orders, witnesses, workers, logger)
    return 0
