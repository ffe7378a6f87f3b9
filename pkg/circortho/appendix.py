"""
Lectura de generadores en formato de texto tipo apéndice.

Formato de un bloque:
    n = 7, d = 1/(2√2)
    1/(2√2), 0.833289 - 0.552838 i, -0.724402 - 0.689378 i,
    0.951773 - 0.306802 i, ...

La cabecera "n = …, d = …" abre un bloque; las líneas siguientes contienen
literales complejos "a + b i" / "a - b i" separados por comas, con espacios
arbitrarios, hasta la siguiente cabecera. Las líneas vacías y las que
empiezan por "#" se ignoran.

Proceso:
    1. Se localizan las cabeceras y se interpreta d como expresión exacta
    2. Se acumulan los literales del bloque
    3. Se construye el Generator y se comprueba que tiene n entradas

Dependencias:
    - re: Reconocimiento de literales y surds
    - fractions: d² exacto a partir de la cabecera
"""
import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from circortho.core import DiagonalValue, Generator, approx
from circortho.errors import CatalogParseError

HEADER_PATTERN = re.compile(r"^\s*n\s*=\s*(?P<n>\d+)\s*,\s*d\s*=\s*(?P<d>.+?)\s*$")

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
COMPLEX_PATTERN = re.compile(
    rf"^(?P<re>[+-]?{_NUMBER})?(?:(?P<sign>[+-])(?P<im>{_NUMBER})?\*?i)?$"
)
PURE_IMAGINARY_PATTERN = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_NUMBER})?\*?i$")

# d = a√r/b  |  d = a/(b√r)
ROOT_OVER_PATTERN = re.compile(r"^(?P<a>\d+)?√(?P<r>\d+)(?:/(?P<b>\d+))?$")
OVER_ROOT_PATTERN = re.compile(r"^(?P<a>\d+)/\(?(?P<b>\d+)?√(?P<r>\d+)\)?$")


@dataclass(frozen=True)
class AppendixEntry:
    """
    Generador leído de un bloque de texto.

    Attributes:
        n: Orden declarado en la cabecera
        d: Valor diagonal exacto de la cabecera
        generator: Generador con las entradas leídas
        line_number: Línea de la cabecera (empezando en 1)
    """

    n: int
    d: DiagonalValue
    generator: Generator
    line_number: int


def _normalize(text: str) -> str:
    text = text.replace("−", "-").replace("\\sqrt", "√").replace("sqrt", "√")
    text = re.sub(r"\s+", "", text)
    # √(5) → √5 y {} de LaTeX
    text = re.sub(r"√\((\d+)\)", r"√\1", text)
    return text.replace("{", "").replace("}", "").replace("*", "")


def parse_surd(text: str) -> DiagonalValue:
    """
    Interpreta una expresión exacta de d: p, p/q, a√r/b, a/(b√r) o decimal.

    Args:
        text: Expresión de d

    Returns:
        DiagonalValue con d² exacto

    Raises:
        ValueError: Si la expresión no se reconoce

    Example:
        >>> parse_surd("1/(2√2)").d_squared
        Fraction(1, 8)
        >>> parse_surd("sqrt(13)/2").d_squared
        Fraction(13, 4)
    """
    cleaned = _normalize(text)
    match = ROOT_OVER_PATTERN.match(cleaned)
    if match:
        a = int(match.group("a") or 1)
        b = int(match.group("b") or 1)
        return DiagonalValue.from_d_squared(Fraction(a * a * int(match.group("r")), b * b))
    match = OVER_ROOT_PATTERN.match(cleaned)
    if match:
        a = int(match.group("a"))
        b = int(match.group("b") or 1)
        return DiagonalValue.from_d_squared(Fraction(a * a, b * b * int(match.group("r"))))
    try:
        value = Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"expresión de d no reconocida: {text!r}") from exc
    return DiagonalValue.from_rational(value)


def parse_complex(text: str) -> complex:
    """
    Interpreta un literal "a + b i", "a - b i", "b i" o "a".

    Example:
        >>> parse_complex("0.833289 - 0.552838 i")
        (0.833289-0.552838j)
    """
    cleaned = _normalize(text).replace("j", "i")
    if not cleaned:
        raise ValueError("literal complejo vacío")
    match = PURE_IMAGINARY_PATTERN.match(cleaned)
    if match:
        magnitude = float(match.group("im") or 1.0)
        return complex(0.0, -magnitude if match.group("sign") == "-" else magnitude)
    match = COMPLEX_PATTERN.match(cleaned)
    if not match or (match.group("re") is None and match.group("sign") is None):
        raise ValueError(f"literal complejo no reconocido: {text!r}")
    real = float(match.group("re") or 0.0)
    imaginary = 0.0
    if match.group("sign"):
        imaginary = float(match.group("im") or 1.0)
        if match.group("sign") == "-":
            imaginary = -imaginary
    return complex(real, imaginary)


def parse_value(text: str) -> complex:
    """Literal complejo o, si no lo es, expresión exacta real (surd)."""
    try:
        return parse_complex(text)
    except ValueError:
        return complex(approx(parse_surd(text)))


def parse_scalar(token: str, n: int) -> complex:
    """
    Escalar de la línea de comandos con raíces de la unidad de orden n.

    Acepta "w" (ω = e^{2πi/n}), "w^k", "i", "-i", sus opuestos con "-" y
    cualquier literal de `parse_value`.

    Example:
        >>> parse_scalar("w^3", 4)
        -1j  # salvo redondeo
    """
    cleaned = _normalize(token).replace("ω", "w")
    sign = 1.0
    if cleaned.startswith("-"):
        sign, cleaned = -1.0, cleaned[1:]
    elif cleaned.startswith("+"):
        cleaned = cleaned[1:]
    match = re.fullmatch(r"w(?:\^(?P<k>-?\d+))?", cleaned)
    if match:
        k = int(match.group("k") or 1) % n
        return sign * cmath.exp(2j * math.pi * k / n)
    return sign * parse_value(cleaned)


def parse_generator_tokens(text: str, n: Optional[int] = None) -> Generator:
    """
    Generador a partir de una lista separada por comas ("w,1,1").

    Args:
        text: Escalares separados por comas
        n: Orden de ω (default: número de escalares)
    """
    tokens = [token for token in text.split(",") if token.strip()]
    order = n or len(tokens)
    return Generator.from_values(parse_scalar(token, order) for token in tokens)


def _close_block(
    header: Tuple[int, int, DiagonalValue],
    items: List[Tuple[int, str]],
    entries: List[AppendixEntry],
) -> None:
    line_number, n, d = header
    values = []
    for item_line, item in items:
        try:
            values.append(parse_value(item))
        except ValueError as exc:
            raise CatalogParseError(str(exc), item_line) from exc
    if len(values) != n:
        raise CatalogParseError(f"el bloque declara n={n} pero tiene {len(values)} entradas", line_number)
    entries.append(AppendixEntry(n, d, Generator.from_values(values), line_number))


def parse_appendix(text: str) -> List[AppendixEntry]:
    """
    Lee todos los bloques de un texto tipo apéndice.

    Args:
        text: Contenido completo

    Returns:
        Lista de entradas en orden de aparición

    Raises:
        CatalogParseError: Con el número de línea del primer error
    """
    entries: List[AppendixEntry] = []
    header: Optional[Tuple[int, int, DiagonalValue]] = None
    items: List[Tuple[int, str]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = HEADER_PATTERN.match(line)
        if match:
            if header is not None:
                _close_block(header, items, entries)
            try:
                d = parse_surd(match.group("d"))
            except ValueError as exc:
                raise CatalogParseError(str(exc), line_number) from exc
            header, items = (line_number, int(match.group("n")), d), []
            continue
        if header is None:
            raise CatalogParseError("datos antes de la primera cabecera 'n = …, d = …'", line_number)
        line = line.strip("()")
        items.extend((line_number, item) for item in line.split(",") if item.strip())
    if header is not None:
        _close_block(header, items, entries)
    if not entries:
        raise CatalogParseError("no se encontró ningún bloque 'n = …, d = …'", 1)
    return entries


def load_appendix(path: Union[str, Path]) -> List[AppendixEntry]:
    """Lee un fichero UTF-8 tipo apéndice."""
    return parse_appendix(Path(path).read_text(encoding="utf-8"))


def looks_like_appendix(text: str) -> bool:
    """True si la primera línea útil es una cabecera "n = …, d = …"."""
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            return bool(HEADER_PATTERN.match(line))
    return False
