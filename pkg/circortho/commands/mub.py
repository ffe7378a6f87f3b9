"""
Subcomando `mub`: ternas de bases mutuamente no sesgadas.

Uso:
    circortho mub --n 3 --generator "w,1,1"
    circortho mub --n 5 --xz
"""
import argparse

from circortho.appendix import parse_generator_tokens
from circortho.catalog import provenance, record_from_triple
from circortho.config import BASIS_TOL
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.mub import assemble_triple, fourier_basis, identity_basis, unbiased_residual, xz_eigenbasis, xz_residual

from circortho.commands.options import add_out, add_tol, echo, emit_records


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("mub", help="ternas de MUB a partir de circulantes")
    parser.add_argument("--n", type=int, required=True, help="dimensión")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--generator", help='generador separado por comas ("w,1,1"; w = e^{2πi/n})')
    source.add_argument("--xz", action="store_true", help="base de autovectores de XZ (n primo)")
    add_tol(parser, default=BASIS_TOL)
    add_out(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Construye la terna, verifica los tres pares e imprime los residuos.

    Returns:
        0 si la terna es MU (los fallos se propagan como UnbiasedPairError)
    """
    if args.xz:
        bases = (identity_basis(args.n), fourier_basis(args.n), xz_eigenbasis(args.n))
        echo(f"XZ: residuo de autovector {xz_residual(bases[2]):.3e}")
    else:
        generator = parse_generator_tokens(args.generator, args.n)
        if generator.n != args.n:
            raise DomainError(f"el generador tiene {generator.n} entradas y --n es {args.n}")
        bases = assemble_triple(generator, args.tol)
        emit_records([record_from_triple(generator, bases, args.tol, provenance(args.invocation))], args.out, logger)

    worst = 0.0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        residual = unbiased_residual(bases[i], bases[j])
        worst = max(worst, residual)
        echo(f"{bases[i].label} / {bases[j].label}: residuo {residual:.3e}")
    passes = worst <= args.tol
    logger.log(RunLogger.format_verify_result(f"terna n={args.n}", passes, worst), "success" if passes else "error")
    return 0 if passes else 1
