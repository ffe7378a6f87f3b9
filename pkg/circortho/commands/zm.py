"""
Subcomando `zm`: matrices circulantes sobre Z_m.

Uso:
    circortho zm --family one-plus --m 4 --n 8
    circortho zm --search --m 5 --n 9
    circortho zm --orders --m 6 --ell-max 10
"""
import argparse

from circortho.catalog import provenance, record_from_zm
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.ringzm import (
    all_minus_family,
    all_minus_generator,
    one_plus_family,
    one_plus_generator,
    one_plus_order_family,
    parity_filter,
    search_zm,
)

from circortho.commands.options import add_out, add_workers, echo, emit_records, resolve_workers


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("zm", help="circulantes sobre Z_m con entradas ±1")
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--family", choices=("all-minus", "one-plus"), help="familia por congruencias")
    mode.add_argument("--search", action="store_true", help="búsqueda exhaustiva")
    mode.add_argument("--orders", action="store_true", help="órdenes de la familia con un +1")
    parser.add_argument("--m", type=int, required=True, help="módulo")
    parser.add_argument("--n", type=int, default=None, help="orden")
    parser.add_argument("--symmetric", action="store_true", help="solo generadores simétricos")
    parser.add_argument("--ell-max", type=int, default=10, help="ℓ máximo con --orders")
    add_workers(parser)
    add_out(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Ejecuta el modo pedido e imprime el resultado.

    Returns:
        0 (los parámetros inválidos se propagan como DomainError)
    """
    source = provenance(args.invocation)
    if args.orders:
        family = one_plus_order_family(args.m, args.ell_max)
        echo(f"Z_{args.m}: n = {family.step}·ℓ + 4")
        for n, values in family.orders:
            echo(f"{n}: d ∈ {{{', '.join(str(d) for d in values)}}}")
        if family.skipped:
            echo(f"ℓ descartados (n impar): {', '.join(str(ell) for ell in family.skipped)}")
        return 0

    if args.n is None:
        raise DomainError("se requiere --n")
    if not parity_filter(args.m, args.n):
        logger.log(f"m={args.m} par y n={args.n} impar: la paridad excluye el par", "warning")

    if args.family == "all-minus":
        values = all_minus_family(args.m, args.n)
        generators = [all_minus_generator(args.m, args.n, d) for d in values]
        echo(f"d ∈ {{{', '.join(str(d) for d in values)}}}")
    elif args.family == "one-plus":
        values = one_plus_family(args.m, args.n)
        generators = [one_plus_generator(args.m, args.n, d) for d in values]
        echo(f"d ∈ {{{', '.join(str(d) for d in values)}}}")
    else:
        generators = search_zm(args.m, args.n, args.symmetric, resolve_workers(args.workers), logger)
        for g in generators:
            echo(g.display())
    emit_records([record_from_zm(g, source) for g in generators], args.out, logger)
    return 0
