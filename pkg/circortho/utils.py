"""
Utilidades de formateo para tablas y salidas de la línea de comandos.

Convierte valores exactos (d², elementos de Z_m, residuos) a texto legible y
construye las tablas de resumen. Todas las tablas muestran a la vez el valor
exacto (racional o surd) y una aproximación con 6 decimales.

Dependencias:
    - pandas: Tablas de resumen y exportación CSV
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import pandas as pd

from circortho.core import DiagonalValue, approx, rational_to_str

SQRT_SIGN = "√"


def _square_part(value: int) -> Tuple[int, int]:
    # value = a²·c con c libre de cuadrados
    from circortho.feasibility import factorize

    if value == 0:
        return 0, 1
    outside, inside = 1, 1
    for prime, exponent in factorize(value).items():
        outside *= prime ** (exponent // 2)
        inside *= prime ** (exponent % 2)
    return outside, inside


def format_surd(d: DiagonalValue) -> str:
    """
    Forma exacta más simple de d: "p/q", "a√c/b" o "a/(b√c)".

    Args:
        d: Valor diagonal

    Returns:
        Representación exacta de d

    Example:
        >>> format_surd(DiagonalValue.from_d_squared("1/8"))
        '1/(2√2)'
        >>> format_surd(DiagonalValue.from_d_squared("13/4"))
        '√13/2'
        >>> format_surd(DiagonalValue.from_d_squared("121/16"))
        '11/4'
    """
    if d.exact_rational is not None:
        return rational_to_str(d.exact_rational)
    p, q = d.d_squared.numerator, d.d_squared.denominator
    # √(p/q) = √(pq)/q = a√c/q
    outside, inside = _square_part(p * q)
    coefficient = Fraction(outside, q)
    a, b = coefficient.numerator, coefficient.denominator
    if b % inside == 0:
        rest = b // inside
        denominator = f"{SQRT_SIGN}{inside}" if rest == 1 else f"({rest}{SQRT_SIGN}{inside})"
        return f"{a}/{denominator}"
    numerator = f"{SQRT_SIGN}{inside}" if a == 1 else f"{a}{SQRT_SIGN}{inside}"
    return numerator if b == 1 else f"{numerator}/{b}"


def format_decimal(d: DiagonalValue) -> str:
    """Aproximación de d con 6 decimales."""
    return f"{approx(d):.6f}"


def format_diagonal(d: DiagonalValue) -> str:
    """
    Valor exacto y aproximado de d.

    Example:
        >>> format_diagonal(DiagonalValue.from_d_squared("25/12"))
        '5/(2√3) ≈ 1.443376'
    """
    return f"{format_surd(d)} ≈ {format_decimal(d)}"


def format_table_row(n: int, values: Sequence[DiagonalValue]) -> str:
    """
    Fila de la tabla de valores de d por orden: "n | d1, d2".

    Example:
        >>> format_table_row(3, [DiagonalValue.from_rational("1/2")])
        '3 | 1/2'
    """
    return f"{n} | {', '.join(format_surd(d) for d in values)}"


def format_zm_value(value: int, m: int) -> str:
    """Elemento de Z_m para tablas: m-1 se muestra como "-1"."""
    return "-1" if value == m - 1 and m > 2 else str(value)


def diagonal_frame(rows: Iterable[Tuple[int, DiagonalValue]]) -> pd.DataFrame:
    """
    Tabla de pares (n, d) con las columnas n, d, d_squared y d_approx.

    Args:
        rows: Pares (orden, valor diagonal)

    Returns:
        DataFrame con una fila por par, en el orden recibido
    """
    records: List[Dict[str, object]] = [
        {
            "n": n,
            "d": format_surd(d),
            "d_squared": rational_to_str(d.d_squared),
            "d_approx": format_decimal(d),
        }
        for n, d in rows
    ]
    return pd.DataFrame(records, columns=["n", "d", "d_squared", "d_approx"])
