"""
Subcomando `construct`: construcciones explícitas.

Uso:
    circortho construct --trivial --n 10 --nu 0
    circortho construct --quaternary --d 3/2
    circortho construct --approximate --n 5 --d 3
"""
import argparse

from circortho.catalog import provenance, record_from_generator
from circortho.config import default_tol
from circortho.core import Generator
from circortho.errors import DomainError
from circortho.event_logger import RunLogger
from circortho.feasibility import parse_diagonal, quaternary_forms, trivial_construction, trivial_diagonal
from circortho.spectral import approximate_trivial_solution, verify_conditions
from circortho.utils import format_diagonal

from circortho.commands.options import add_out, add_tol, echo, emit_records


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("construct", help="construcciones explícitas de generadores")
    family = parser.add_mutually_exclusive_group(required=True)
    family.add_argument("--trivial", action="store_true", help="circ_n(n/2-1, -ω^ν, ...)")
    family.add_argument("--quaternary", action="store_true", help="formas con entradas en {1, -1, i, -i}")
    family.add_argument("--approximate", action="store_true", help="solución no hermítica para n ≤ 2d+2")
    parser.add_argument("--n", type=int, default=None, help="orden")
    parser.add_argument("--nu", type=int, default=0, help="índice ν de la construcción trivial")
    parser.add_argument("--d", default=None, help="valor diagonal racional p/q")
    add_tol(parser)
    add_out(parser)
    parser.set_defaults(handler=run)


def format_entry(value: complex) -> str:
    """Entrada con 6 decimales, sin parte imaginaria si es nula."""
    real = round(value.real, 6) + 0.0
    imaginary = round(value.imag, 6) + 0.0
    if imaginary == 0:
        return f"{real:g}"
    if real == 0:
        return f"{imaginary:g}i"
    sign = "+" if imaginary > 0 else "-"
    return f"{real:g} {sign} {abs(imaginary):g}i"


def format_generator(g: Generator) -> str:
    """circ_n(c_0, c_1, ...) legible."""
    return f"circ_{g.n}({', '.join(format_entry(v) for v in g.entries)})"


def run(args: argparse.Namespace, logger: RunLogger) -> int:
    """
    Construye, verifica e imprime los generadores pedidos.

    Returns:
        0 si todos cumplen las condiciones, 1 en otro caso
    """
    tol = args.tol or default_tol()
    source = provenance(args.invocation)
    built = []
    if args.trivial:
        if args.n is None:
            raise DomainError("--trivial requiere --n")
        built.append(("complex", trivial_construction(args.n, args.nu), trivial_diagonal(args.n), ""))
    elif args.quaternary:
        if args.d is None:
            raise DomainError("--quaternary requiere --d")
        forms = quaternary_forms(parse_diagonal(args.d))
        if not forms:
            logger.log(f"No hay formas cuaternarias con d = {args.d} (2d debe ser entero)", "warning")
        for form in forms:
            note = " conjectural" if form.conjectural else ""
            built.append(("quaternary", form.generator, form.d, f"{form.label}{note}"))
    else:
        if args.n is None or args.d is None:
            raise DomainError("--approximate requiere --n y --d")
        d = parse_diagonal(args.d)
        built.append(("complex", approximate_trivial_solution(args.n, d), d, ""))

    records = []
    all_pass = True
    for kind, generator, d, label in built:
        report = verify_conditions(generator, d, tol)
        all_pass &= report.passes
        suffix = f" [{label}]" if label else ""
        echo(f"{format_generator(generator)}  d = {format_diagonal(d)}{suffix}")
        records.append(record_from_generator(kind, generator, d, report, f"{source}{suffix}"))
    emit_records(records, args.out, logger)
    return 0 if all_pass else 1
