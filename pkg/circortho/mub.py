"""
Bases mutuamente no sesgadas (MUB) a partir de matrices circulantes.

Una circulante con todas las entradas unimodulares y CC* = nI, escalada por
1/√n, es una base ortonormal no sesgada respecto a la base canónica y a la
de Fourier; juntas forman una terna de MUB. Para n primo se añade la base de
autovectores del operador XZ.

Dependencias:
    - numpy: Productos matriciales y productos escalares
"""
import math
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

import numpy as np

from circortho.config import BASIS_TOL
from circortho.core import Generator
from circortho.errors import BasisRejectedError, DomainError, UnbiasedPairError
from circortho.spectral import circulant_matrix, dft_matrix


def _gram_deviation(columns: np.ndarray) -> float:
    n = columns.shape[0]
    return float(np.max(np.abs(columns.conj().T @ columns - np.eye(n))))


@dataclass(eq=False)
class Basis:
    """
    Base ortonormal de C^n guardada por columnas.

    Attributes:
        n: Dimensión
        columns: Matriz n×n cuya columna k es el vector k de la base
        label: Nombre de la base ("identity", "fourier", "circulant", "xz")
    """

    n: int
    columns: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        self.columns = np.asarray(self.columns, dtype=np.complex128)
        if self.columns.shape != (self.n, self.n):
            raise DomainError(f"una base de dimensión {self.n} necesita una matriz {self.n}×{self.n}")
        residual = _gram_deviation(self.columns)
        if residual > BASIS_TOL:
            raise BasisRejectedError(f"las columnas no son ortonormales (residuo {residual:.3e})", residual)

    def vector(self, k: int) -> np.ndarray:
        """Vector k de la base."""
        return self.columns[:, k]


def gram_residual(basis: Basis) -> float:
    """Máxima desviación de la matriz de Gram respecto a la identidad."""
    return _gram_deviation(basis.columns)


def identity_basis(n: int) -> Basis:
    """Base canónica e_0, ..., e_{n-1}."""
    if n < 1:
        raise DomainError("la dimensión debe ser ≥ 1")
    return Basis(n, np.eye(n, dtype=np.complex128), "identity")


def fourier_basis(n: int) -> Basis:
    """
    Base de Fourier: v_k = (1/√n)(1, ω^k, ..., ω^{(n-1)k}).

    Example:
        >>> np.round(fourier_basis(2).columns * math.sqrt(2)).real
        array([[ 1.,  1.],
               [ 1., -1.]])
    """
    if n < 2:
        raise DomainError("la base de Fourier requiere n ≥ 2")
    return Basis(n, dft_matrix(n) / math.sqrt(n), "fourier")


def normalize_circulant(g: Generator) -> Basis:
    """
    Matriz circulante de g escalada por 1/√n, como base.

    Se admite cualquier circulante unimodular con CC* = nI, sin exigir
    hermiticidad ni diagonal real (ej. circ_3(ω, 1, 1)).

    Raises:
        BasisRejectedError: Si el residuo de Gram supera 1e-9
    """
    if g.n < 2:
        raise DomainError("la base circulante requiere n ≥ 2")
    columns = circulant_matrix(g) / math.sqrt(g.n)
    residual = _gram_deviation(columns)
    if residual > BASIS_TOL:
        raise BasisRejectedError(
            f"circ_{g.n} escalada no es unitaria (residuo {residual:.3e})", residual
        )
    return Basis(g.n, columns, "circulant")


def unbiased_residual(b1: Basis, b2: Basis) -> float:
    """max_{j,k} | |⟨φ_j, ψ_k⟩|² - 1/n |."""
    if b1.n != b2.n:
        raise DomainError(f"dimensiones distintas: {b1.n} y {b2.n}")
    overlaps = np.abs(b1.columns.conj().T @ b2.columns) ** 2
    return float(np.max(np.abs(overlaps - 1.0 / b1.n)))


def unbiased(b1: Basis, b2: Basis, tol: float = BASIS_TOL) -> bool:
    """
    True si todos los |⟨φ_j, ψ_k⟩|² valen 1/n dentro de tol.

    Raises:
        DomainError: Si las dimensiones no coinciden
    """
    return unbiased_residual(b1, b2) <= tol


def assemble_triple(g: Generator, tol: float = BASIS_TOL) -> Tuple[Basis, Basis, Basis]:
    """
    Terna (canónica, Fourier, circulante normalizada) de MUB.

    Args:
        g: Generador unimodular con CC* = nI
        tol: Tolerancia de no sesgo

    Returns:
        Las tres bases, verificadas par a par

    Raises:
        BasisRejectedError: Si g no da una base
        UnbiasedPairError: Con el par que falla y su residuo
    """
    bases = (identity_basis(g.n), fourier_basis(g.n), normalize_circulant(g))
    for i, j in ((0, 1), (0, 2), (1, 2)):
        residual = unbiased_residual(bases[i], bases[j])
        if residual > tol:
            pair = (bases[i].label, bases[j].label)
            raise UnbiasedPairError(f"las bases {pair[0]} y {pair[1]} no son MU", pair, residual)
    return bases


def xz_operator(n: int) -> np.ndarray:
    """Producto XZ con X e_j = e_{j+1} (desplazamiento cíclico) y Z = diag(ω^j)."""
    shift = np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)
    return shift @ np.diag(dft_matrix(n)[1])


def xz_residual(basis: Basis) -> float:
    """Máximo ||XZ φ - μ φ|| sobre las columnas, con μ el cociente de Rayleigh."""
    operator = xz_operator(basis.n)
    worst = 0.0
    for k in range(basis.n):
        phi = basis.vector(k)
        image = operator @ phi
        mu = np.vdot(phi, image)
        worst = max(worst, float(np.linalg.norm(image - mu * phi)))
    return worst


def xz_eigenbasis(n: int) -> Basis:
    """
    Base de autovectores de XZ para n primo.

    Componente k de φ_j: (1/√n) ω^{-jk-s_k}, con s_k = k + (k+1) + ... + (n-1).
    Para n = 2 esa fórmula no cierra el ciclo y se usa (1/√n) ω^{-jk} τ^{-k}
    con τ = e^{iπ(n-1)/n}. Cada columna se comprueba como autovector.

    Raises:
        DomainError: Si n no es primo
        BasisRejectedError: Si alguna columna no es autovector dentro de 1e-9
    """
    from circortho.feasibility import is_prime

    if not is_prime(n):
        raise DomainError(f"la base XZ requiere n primo, recibido {n}")
    j = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    if n == 2:
        turns = (-j * k) / n - k * (n - 1) / (2 * n)
    else:
        s = (n * (n - 1) - k * (k - 1)) // 2
        turns = ((-j * k - s) % n) / n
    # Fila j de `vectors` = φ_j
    vectors = np.exp(2j * np.pi * turns) / math.sqrt(n)
    basis = Basis(n, vectors.T, "xz")
    residual = xz_residual(basis)
    if residual > BASIS_TOL:
        raise BasisRejectedError(f"φ_j no son autovectores de XZ (residuo {residual:.3e})", residual)
    return basis


def basis_to_column_major(basis: Basis) -> List[List[float]]:
    """Entradas de la base por columnas, como pares [re, im]."""
    return [[float(v.real), float(v.imag)] for v in basis.columns.T.reshape(-1)]


def basis_from_column_major(n: int, pairs: Sequence[Sequence[Any]], label: str = "") -> Basis:
    """Inversa de `basis_to_column_major`."""
    values = np.array([complex(float(re), float(im)) for re, im in pairs], dtype=np.complex128)
    if values.shape[0] != n * n:
        raise DomainError(f"se esperaban {n * n} entradas para una base de dimensión {n}")
    return Basis(n, values.reshape(n, n).T, label)
