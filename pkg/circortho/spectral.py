"""
Maquinaria de Fourier discreta para matrices circulantes.

Una matriz circulante C = circ_n(c_0, ..., c_{n-1}) se diagonaliza con la DFT:
sus autovalores son λ_k = Σ_j c_j ω^{jk} con ω = e^{2πi/n}, y el generador se
recupera con la transformada inversa c_j = (1/n) Σ_k λ_k ω^{-jk}.

Funciones principales:
    - eigenvalues / generator_from_eigenvalues: DFT directa e inversa
    - verify_conditions: comprobación de c_0 = d, |c_j| = 1 y CC* = (d²+n-1)I
    - is_hermitian, autocorrelation
    - approximate_trivial_solution: solución no hermítica para n ≤ 2d+2

Dependencias:
    - numpy: Productos matriciales y funciones trigonométricas

Notas de implementación:
    - La DFT de referencia es la evaluación directa O(n²) con raíces de la
      unidad precalculadas por n; el ángulo se reduce módulo n antes de
      evaluar seno y coseno.
    - Hasta n = 64 el residuo de Gram se calcula con productos de filas
      explícitos; por encima se usa el criterio espectral.
"""
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Any, Dict, Optional, Sequence

import numpy as np

from circortho.config import ROWS_CHECK_MAX_ORDER, default_tol
from circortho.core import DiagonalValue, Generator, approx
from circortho.errors import DomainError, StructureError


@lru_cache(maxsize=None)
def _roots_table(n: int) -> np.ndarray:
    exponents = np.outer(np.arange(n), np.arange(n)) % n
    table = np.exp(2j * np.pi * exponents / n)
    table.setflags(write=False)
    return table


def dft_matrix(n: int) -> np.ndarray:
    """
    Matriz W[j, k] = ω^{jk}, con ω = e^{2πi/n}.

    El exponente jk se reduce módulo n antes de evaluar la exponencial, lo que
    evita acumular error de fase para productos grandes. La tabla se calcula
    una sola vez por n y es de solo lectura.

    Args:
        n: Orden (≥ 1)

    Returns:
        Array complejo n×n de solo lectura
    """
    if n < 1:
        raise DomainError("el orden n debe ser ≥ 1")
    return _roots_table(n)


def eigenvalues(g: Generator) -> np.ndarray:
    """
    Autovalores λ_k = Σ_j c_j ω^{jk} de circ_n(g).

    Args:
        g: Generador de orden n

    Returns:
        Array complejo de longitud n (λ_0, ..., λ_{n-1})

    Example:
        >>> eigenvalues(Generator.from_values([1, -1, -1, -1]))
        array([-2.+0.j,  2.+0.j,  2.+0.j,  2.+0.j])
    """
    return g.as_array() @ dft_matrix(g.n)


def generator_from_eigenvalues(lambdas: Sequence[complex]) -> Generator:
    """
    Transformada inversa: c_j = (1/n) Σ_k λ_k ω^{-jk}.

    Args:
        lambdas: Espectro (λ_0, ..., λ_{n-1})

    Returns:
        Generador de la matriz circulante con ese espectro

    Example:
        >>> generator_from_eigenvalues([2, 2, 2, -2]).entries
        (1, -1j, 1, 1j)  # salvo redondeo
    """
    values = np.asarray(lambdas, dtype=np.complex128)
    n = values.shape[0]
    if n < 1:
        raise DomainError("el espectro no puede estar vacío")
    entries = (dft_matrix(n).conj() @ values) / n
    return Generator.from_values(entries)


def circulant_matrix(g: Generator) -> np.ndarray:
    """
    Matriz densa C[r, j] = c_{(j - r) mod n}.

    Cada fila es el desplazamiento cíclico a la derecha de la anterior.
    """
    c = g.as_array()
    index = (np.arange(g.n)[None, :] - np.arange(g.n)[:, None]) % g.n
    return c[index]


def gram_matrix(g: Generator) -> np.ndarray:
    """Producto CC* de la matriz circulante."""
    matrix = circulant_matrix(g)
    return matrix @ matrix.conj().T


def row_inner_products(g: Generator) -> np.ndarray:
    """
    Productos ⟨fila 0, fila k⟩ para k = 0..n-1.

    La matriz es circulante, así que la fila 0 de CC* determina todo el producto.
    """
    return gram_matrix(g)[0]


def rows_residual(g: Generator, d: DiagonalValue) -> float:
    """
    Máxima desviación |(CC*)_{rs} - (d²+n-1)δ_{rs}| con productos de filas explícitos.
    """
    target = float(d.d_squared) + g.n - 1
    deviation = gram_matrix(g) - target * np.eye(g.n)
    return float(np.max(np.abs(deviation)))


def spectral_residual(g: Generator, d: DiagonalValue) -> float:
    """
    Criterio espectral: max_k | |λ_k|² - (d²+n-1) |.

    CC* es circulante con autovalores |λ_k|², por lo que CC* = (d²+n-1)I
    equivale a que todos los |λ_k|² valgan d²+n-1.
    """
    target = float(d.d_squared) + g.n - 1
    return float(np.max(np.abs(np.abs(eigenvalues(g)) ** 2 - target)))


@dataclass(frozen=True)
class VerificationReport:
    """
    Resultado de comprobar las condiciones de ortogonalidad.

    Attributes:
        gram_residual: Máxima desviación de CC* respecto a (d²+n-1)I
        unimodularity_residual: max_{j≥1} | |c_j| - 1 |
        diagonal_residual: |c_0 - d|
        hermitian: True si c_j = conj(c_{n-j}) dentro de la tolerancia
        passes: True si los tres residuos son ≤ tol
        tol: Tolerancia con la que se elaboró el informe
        method: "rows" o "spectral"
    """

    gram_residual: float
    unimodularity_residual: float
    diagonal_residual: float
    hermitian: bool
    passes: bool
    tol: float
    method: str = "rows"

    def to_dict(self) -> Dict[str, Any]:
        """Campos del informe como diccionario (formato del catálogo)."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        """Inversa de `to_dict`."""
        return cls(
            gram_residual=float(data["gram_residual"]),
            unimodularity_residual=float(data["unimodularity_residual"]),
            diagonal_residual=float(data["diagonal_residual"]),
            hermitian=bool(data["hermitian"]),
            passes=bool(data["passes"]),
            tol=float(data.get("tol", default_tol())),
            method=str(data.get("method", "rows")),
        )


def verify_conditions(
    g: Generator,
    d: DiagonalValue,
    tol: Optional[float] = None,
    method: str = "auto",
) -> VerificationReport:
    """
    Comprueba c_0 = d ≥ 0, |c_j| = 1 (j ≥ 1) y CC* = (d²+n-1)I.

    Args:
        g: Generador a comprobar
        d: Valor diagonal exacto
        tol: Tolerancia (default: CIRCORTHO_TOL o 1e-9)
        method: "rows" (productos de filas), "spectral" o "auto"
                ("rows" hasta n = 64, "spectral" por encima)

    Returns:
        VerificationReport con los tres residuos

    Raises:
        DomainError: Si tol ≤ 0 o el método no existe
        StructureError: Si el número de entradas no coincide con n

    Example:
        >>> verify_conditions(Generator.from_values([2, -1, -1, -1, -1, -1]),
        ...                   DiagonalValue.from_rational(2)).passes
        True
    """
    if tol is None:
        tol = default_tol()
    if tol <= 0:
        raise DomainError("la tolerancia debe ser positiva")
    if len(g.entries) != g.n:
        raise StructureError("el número de entradas no coincide con n")
    if method == "auto":
        method = "rows" if g.n <= ROWS_CHECK_MAX_ORDER else "spectral"
    if method == "rows":
        gram = rows_residual(g, d)
    elif method == "spectral":
        gram = spectral_residual(g, d)
    else:
        raise DomainError(f"método de verificación desconocido: {method}")

    c = g.as_array()
    unimodular = float(np.max(np.abs(np.abs(c[1:]) - 1.0))) if g.n > 1 else 0.0
    diagonal = float(abs(c[0] - approx(d)))
    return VerificationReport(
        gram_residual=gram,
        unimodularity_residual=unimodular,
        diagonal_residual=diagonal,
        hermitian=is_hermitian(g, tol),
        passes=max(gram, unimodular, diagonal) <= tol,
        tol=tol,
        method=method,
    )


def is_hermitian(g: Generator, tol: Optional[float] = None) -> bool:
    """
    True si circ_n(g) es hermítica: c_j = conj(c_{n-j}) y c_0 real.

    Example:
        >>> is_hermitian(Generator.from_values([1, -1j, 1, 1j]), 1e-9)
        True
        >>> is_hermitian(Generator.from_values([1, 1j, 1j]), 1e-9)
        False
    """
    if tol is None:
        tol = default_tol()
    c = g.as_array()
    mirrored = np.conj(c[(-np.arange(g.n)) % g.n])
    if abs(c[0].imag) > tol:
        return False
    return bool(np.all(np.abs(c[1:] - mirrored[1:]) <= tol))


def autocorrelation(a: Sequence[complex], shift: int) -> complex:
    """
    Autocorrelación periódica θ_a(ν) = Σ_i a_i · conj(a_{i+ν mod n}).

    Args:
        a: Secuencia de longitud n
        shift: Desplazamiento ν con 0 ≤ ν < n

    Returns:
        Valor complejo de la autocorrelación

    Raises:
        DomainError: Si el desplazamiento está fuera de rango

    Example:
        >>> autocorrelation([1, 1j, -1, -1j], 1)
        -4j
    """
    values = np.asarray(a, dtype=np.complex128)
    n = values.shape[0]
    if not 0 <= shift < n:
        raise DomainError(f"desplazamiento {shift} fuera de rango [0, {n})")
    return complex(np.sum(values * np.conj(np.roll(values, -shift))))


def approximate_trivial_solution(n: int, d: DiagonalValue) -> Generator:
    """
    Solución no hermítica circ_n(d, -e^{iα}, ..., -e^{iα}) con α = arccos((n-2)/(2d)).

    CC* es circulante con generador (d²+n-1, n-2-2d·cos α, ...), que se anula
    fuera de la diagonal para la α elegida. Existe para todo 2 ≤ n ≤ 2d+2.

    Args:
        n: Orden (≥ 2)
        d: Valor diagonal (d > 0)

    Returns:
        Generador que cumple las condiciones

    Raises:
        DomainError: Si d = 0 o n > 2d+2
    """
    value = approx(d)
    if n < 2:
        raise DomainError("el orden debe ser ≥ 2")
    if value <= 0 or d.d_squared * 4 < (n - 2) ** 2:
        raise DomainError(f"no hay solución trivial no hermítica para n={n} con d≈{value:.6f}")
    cosine = max(-1.0, min(1.0, (n - 2) / (2 * value)))
    off_diagonal = -complex(math.cos(math.acos(cosine)), math.sin(math.acos(cosine)))
    return Generator.from_values([value] + [off_diagonal] * (n - 1))
