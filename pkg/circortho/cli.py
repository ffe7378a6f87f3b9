"""Punto de entrada de la línea de comandos.

Construye el parser principal y monta todos los subcomandos de
circortho/commands/. Cada subcomando devuelve su código de salida; las
excepciones se traducen a códigos aquí.

Códigos de salida:
- 0: todo verificado
- 1: fallo de verificación
- 2: argumentos inválidos o límite de coste superado
- 3: error de entrada/salida
- 4: error de lectura de catálogo o apéndice

Los subcomandos están organizados en los siguientes módulos:
- commands/search.py: Búsqueda espectral exhaustiva
- commands/verify.py: Verificación de catálogos y textos tipo apéndice
- commands/classify.py: Filtros de existencia de pares (n, d)
- commands/construct.py: Construcciones explícitas
- commands/zm.py: Circulantes sobre Z_m
- commands/mub.py: Ternas de MUB
"""
import argparse
import sys
from typing import List, Optional

from circortho import __version__
from circortho.commands import all_commands
from circortho.commands.options import command_line
from circortho.errors import (
    BasisRejectedError,
    CatalogParseError,
    CircOrthoError,
    UnbiasedPairError,
)
from circortho.event_logger import RunLogger

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_IO_ERROR = 3
EXIT_PARSE_ERROR = 4


def build_parser() -> argparse.ArgumentParser:
    """Parser principal con todos los subcomandos montados."""
    parser = argparse.ArgumentParser(
        prog="circortho",
        description="Matrices circulantes con diagonal constante y filas ortogonales",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--quiet", action="store_true", help="no mostrar eventos por stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Montar todos los subcomandos
    for command in all_commands:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta la línea de comandos.

    Args:
        argv: Argumentos sin el nombre del programa (default: sys.argv[1:])

    Returns:
        Código de salida
    """
    arguments = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(arguments)
    except SystemExit as exc:
        # argparse sale con 2 en errores de uso y con 0 en --help
        return int(exc.code or 0)

    args.invocation = command_line(arguments)
    logger = RunLogger(verbose=not args.quiet)
    try:
        return int(args.handler(args, logger))
    except CatalogParseError as exc:
        logger.log(str(exc), "error")
        return EXIT_PARSE_ERROR
    except (BasisRejectedError, UnbiasedPairError) as exc:
        logger.log(f"{exc} (residuo {exc.residual:.3e})", "error")
        return EXIT_VERIFY_FAILED
    except (CircOrthoError, ValueError) as exc:
        logger.log(str(exc), "error")
        return EXIT_BAD_ARGUMENTS
    except OSError as exc:
        logger.log(f"Error de E/S: {exc}", "error")
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
