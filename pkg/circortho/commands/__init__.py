"""
Subcomandos de la línea de comandos de circortho.

Cada módulo expone `register(subparsers)`, que añade su parser y fija
`handler=run`; `run(args, logger)` devuelve el código de salida.
"""
from circortho.commands import classify, construct, mub, search, verify, zm

# Lista de todos los subcomandos para facilitar el montaje en cli.py
all_commands = [
    search,
    verify,
    classify,
    construct,
    zm,
    mub,
]

__all__ = [
    "search",
    "verify",
    "classify",
    "construct",
    "zm",
    "mub",
    "all_commands",
]
