"""
Tipos escalares exactos y modelo de datos del generador.

Este módulo contiene los tipos compartidos por el resto del paquete:
    - Rational: alias de `fractions.Fraction` (enteros de precisión arbitraria)
    - DiagonalValue: valor d de la diagonal guardado a través de d² exacto
    - Generator: primera fila (c_0, ..., c_{n-1}) de una matriz circulante

Los escalares complejos son `complex` de Python (doble precisión); los
generadores almacenados nunca contienen NaN ni infinitos.

Dependencias:
    - fractions: Aritmética racional exacta
    - numpy: Conversión de generadores a arrays
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from circortho.errors import DomainError, StructureError

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Convierte un entero, un string "p/q" o un Fraction en Rational normalizado.

    Args:
        value: Valor a convertir

    Returns:
        Fraction con denominador positivo y fracción reducida

    Example:
        >>> to_rational("50/8")
        Fraction(25, 4)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def rational_to_str(q: Fraction) -> str:
    """
    Serializa un racional como "p/q" (se omite q cuando vale 1).

    Example:
        >>> rational_to_str(Fraction(25, 4))
        '25/4'
        >>> rational_to_str(Fraction(7))
        '7'
    """
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_perfect_square(q: RationalLike) -> Optional[Fraction]:
    """
    Raíz cuadrada racional exacta, si existe.

    Un racional reducido p/q es un cuadrado perfecto si y solo si p y q lo son.

    Args:
        q: Racional no negativo

    Returns:
        La raíz no negativa, o None si q no es el cuadrado de un racional

    Raises:
        DomainError: Si q es negativo

    Example:
        >>> is_perfect_square(Fraction(25, 4))
        Fraction(5, 2)
        >>> is_perfect_square(Fraction(1, 8)) is None
        True
    """
    q = to_rational(q)
    if q < 0:
        raise DomainError(f"no existe raíz cuadrada real de {rational_to_str(q)}")
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root != q.numerator or den_root * den_root != q.denominator:
        return None
    return Fraction(num_root, den_root)


@dataclass(frozen=True)
class DiagonalValue:
    """
    Valor d ≥ 0 de la diagonal, representado exactamente por d².

    d suele ser irracional (ej. 1/(2√2)); por eso todas las comparaciones
    exactas entre diagonales comparan d².

    Attributes:
        d_squared: d² como racional no negativo
        exact_rational: d como racional, presente solo si d² es un cuadrado perfecto
    """

    d_squared: Fraction
    exact_rational: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.d_squared < 0:
            raise DomainError("d² debe ser no negativo")
        expected = is_perfect_square(self.d_squared)
        if self.exact_rational != expected:
            # Se recalcula siempre para mantener el invariante
            object.__setattr__(self, "exact_rational", expected)

    @classmethod
    def from_d_squared(cls, d_squared: RationalLike) -> "DiagonalValue":
        """Construye el valor a partir de d² exacto."""
        return cls(to_rational(d_squared))

    @classmethod
    def from_rational(cls, d: RationalLike) -> "DiagonalValue":
        """
        Construye el valor a partir de d racional.

        Raises:
            DomainError: Si d es negativo
        """
        d = to_rational(d)
        if d < 0:
            raise DomainError("d debe ser no negativo")
        return cls(d * d, d)

    @property
    def is_rational(self) -> bool:
        """True si d es racional."""
        return self.exact_rational is not None

    def to_dict(self) -> Dict[str, Any]:
        """
        Representación serializable.

        Returns:
            {"d_squared": "p/q", "d_exact": "p/q" | None}
        """
        return {
            "d_squared": rational_to_str(self.d_squared),
            "d_exact": rational_to_str(self.exact_rational) if self.exact_rational is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiagonalValue":
        """Inversa de `to_dict` (d_exact se recalcula)."""
        return cls.from_d_squared(data["d_squared"])


def approx(d: DiagonalValue) -> float:
    """
    √(d²) en doble precisión.

    Example:
        >>> approx(DiagonalValue.from_d_squared("121/16"))
        2.75
    """
    if d.exact_rational is not None:
        return float(d.exact_rational)
    return math.sqrt(d.d_squared)


@dataclass(frozen=True)
class Generator:
    """
    Generador (c_0, ..., c_{n-1}) de una matriz circulante.

    entries[0] es el valor diagonal c_0. Las entradas son `complex` finitos.

    Attributes:
        n: Orden de la matriz (≥ 1)
        entries: Tupla de n complejos
    """

    n: int
    entries: Tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("el orden n debe ser ≥ 1")
        if len(self.entries) != self.n:
            raise StructureError(
                f"el generador declara n={self.n} pero tiene {len(self.entries)} entradas"
            )
        for value in self.entries:
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise StructureError("el generador contiene valores no finitos")

    @classmethod
    def from_values(cls, values: Iterable[Any]) -> "Generator":
        """
        Construye un generador a partir de cualquier secuencia de escalares.

        Example:
            >>> Generator.from_values([1, -1j, 1, 1j]).n
            4
        """
        entries = tuple(complex(v) for v in values)
        return cls(len(entries), entries)

    def as_array(self) -> np.ndarray:
        """Entradas como array numpy complex128."""
        return np.asarray(self.entries, dtype=np.complex128)

    def conjugate(self) -> "Generator":
        """Generador con todas las entradas conjugadas."""
        return Generator(self.n, tuple(v.conjugate() for v in self.entries))

    def to_pairs(self) -> list:
        """Entradas como lista de pares [re, im] (formato del catálogo)."""
        return [[v.real, v.imag] for v in self.entries]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "Generator":
        """Inversa de `to_pairs`."""
        return cls.from_values(complex(float(re), float(im)) for re, im in pairs)
