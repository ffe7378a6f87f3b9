"""
Matrices circulantes sobre Z_m con entradas fuera de la diagonal ≡ ±1 (mod m).

La condición de ortogonalidad se lee como congruencias: C·C^T ≡ (d²+n-1)I
(mod m). Los elementos de Z_m se guardan como representantes canónicos
0..m-1; -1 se guarda como m-1 y solo se muestra como "-1" en tablas.

Funciones principales:
    - verify_zm: comprobación exacta de C·C^T mod m
    - parity_filter: m par exige n par
    - all_minus_family / one_plus_family: familias por congruencias lineales
    - one_plus_order_family: órdenes n = paso·ℓ + 4 de la familia con un +1
    - search_zm: búsqueda exhaustiva en órdenes pequeños

Dependencias:
    - numpy: Productos matriciales enteros y autocorrelaciones por lotes
    - concurrent.futures: Reparto de la búsqueda por valores de d
"""
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from circortho.config import ZM_MAX_ORDER_GENERAL, ZM_MAX_ORDER_SYMMETRIC
from circortho.errors import DomainError, SearchLimitError, StructureError
from circortho.event_logger import RunLogger
from circortho.utils import format_zm_value


@dataclass(frozen=True)
class ZmGenerator:
    """
    Generador de una matriz circulante sobre Z_m.

    Attributes:
        m: Módulo (≥ 2)
        n: Orden (≥ 2)
        d: Elemento de la diagonal en 0..m-1
        offdiag: n-1 entradas, cada una 1 o m-1
    """

    m: int
    n: int
    d: int
    offdiag: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError("el módulo m debe ser ≥ 2")
        if self.n < 2:
            raise DomainError("el orden n debe ser ≥ 2")
        if len(self.offdiag) != self.n - 1:
            raise StructureError(f"se esperaban {self.n - 1} entradas fuera de la diagonal")
        offdiag = tuple(int(v) % self.m for v in self.offdiag)
        if any(v not in (1, self.m - 1) for v in offdiag):
            raise DomainError("las entradas fuera de la diagonal deben ser ≡ ±1 (mod m)")
        object.__setattr__(self, "d", int(self.d) % self.m)
        object.__setattr__(self, "offdiag", offdiag)

    @classmethod
    def from_signs(cls, m: int, d: int, signs: Sequence[int]) -> "ZmGenerator":
        """
        Construye el generador a partir de signos ±1.

        Example:
            >>> ZmGenerator.from_signs(5, 1, [1] * 7 + [-1]).offdiag[-1]
            4
        """
        return cls(m, len(signs) + 1, d, tuple(int(s) % m for s in signs))

    @property
    def entries(self) -> Tuple[int, ...]:
        """Generador completo (d, c_1, ..., c_{n-1})."""
        return (self.d,) + self.offdiag

    def is_symmetric(self) -> bool:
        """True si c_k = c_{n-k} para todo k."""
        c = self.entries
        return all(c[k] == c[self.n - k] for k in range(1, self.n))

    def display(self) -> str:
        """Generador legible con -1 en lugar de m-1."""
        shown = [str(self.d)] + [format_zm_value(v, self.m) for v in self.offdiag]
        return f"circ_{self.n}({', '.join(shown)}) mod {self.m}"

    def to_dict(self) -> Dict[str, Any]:
        """Representación JSON: {"m", "n", "d", "offdiag"}."""
        return {"m": self.m, "n": self.n, "d": self.d, "offdiag": list(self.offdiag)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ZmGenerator":
        """Inversa de `to_dict`."""
        return cls(int(data["m"]), int(data["n"]), int(data["d"]), tuple(int(v) for v in data["offdiag"]))


@dataclass
class OnePlusOrderFamily:
    """
    Órdenes de la familia con un único +1 en la posición n/2.

    Attributes:
        m: Módulo
        step: Paso de la progresión n = step·ℓ + 4
        orders: Pares (n, valores de d) con solución
        skipped: Valores de ℓ descartados por dar n impar
    """

    m: int
    step: int
    orders: List[Tuple[int, List[int]]] = field(default_factory=list)
    skipped: List[int] = field(default_factory=list)


def _check_modulus_order(m: int, n: int) -> None:
    if m < 2:
        raise DomainError("el módulo m debe ser ≥ 2")
    if n < 2:
        raise DomainError("el orden n debe ser ≥ 2")


def _circulant(entries: Sequence[int]) -> np.ndarray:
    n = len(entries)
    c = np.asarray(entries, dtype=np.int64)
    index = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return c[index]


def verify_zm(g: ZmGenerator) -> bool:
    """
    Comprueba C·C^T ≡ (d²+n-1)I (mod m) con aritmética entera exacta.

    Example:
        >>> verify_zm(ZmGenerator(3, 4, 2, (1, 1, 1)))
        True
        >>> verify_zm(ZmGenerator(4, 3, 0, (1, 1)))
        False
    """
    matrix = _circulant(g.entries)
    product = (matrix @ matrix.T) % g.m
    target = (g.d * g.d + g.n - 1) % g.m
    return bool(np.all(product == target * np.eye(g.n, dtype=np.int64)))


def symmetric_condition(g: ZmGenerator) -> bool:
    """
    Comprobación reducida para generadores simétricos.

    Para c_k = c_{n-k} basta comprobar los productos de la fila 0 con las
    filas k = 1, ..., ⌈n/2⌉+1 (además de la diagonal).

    Raises:
        DomainError: Si el generador no es simétrico
    """
    if not g.is_symmetric():
        raise DomainError("la comprobación reducida solo vale para generadores simétricos")
    c = np.asarray(g.entries, dtype=np.int64)
    if (g.d * g.d + g.n - 1 - int(np.dot(c, c))) % g.m:
        return False
    last = min(g.n - 1, math.ceil(g.n / 2) + 1)
    for k in range(1, last + 1):
        if int(np.dot(c, np.roll(c, k))) % g.m:
            return False
    return True


def negate_zm(g: ZmGenerator) -> ZmGenerator:
    """Negación entrada a entrada (m-d, -c_1, ...); conserva la ortogonalidad."""
    return ZmGenerator(g.m, g.n, -g.d, tuple(-v for v in g.offdiag))


def parity_filter(m: int, n: int) -> bool:
    """
    False si m es par y n impar; True en otro caso.

    True solo significa que la paridad no excluye el par: el recíproco no se
    cumple (circ_4(2, 1, 1, 1) sobre Z_3 tiene m impar y n par).
    """
    _check_modulus_order(m, n)
    return not (m % 2 == 0 and n % 2 == 1)


def _linear_solutions(m: int, rhs: int) -> List[int]:
    # d ∈ Z_m con 2d ≡ rhs (mod m)
    return [d for d in range(m) if (2 * d - rhs) % m == 0]


def all_minus_family(m: int, n: int) -> List[int]:
    """
    Valores de d con circ_n(d, -1, ..., -1) ortogonal sobre Z_m: 2d ≡ n-2.

    Example:
        >>> all_minus_family(5, 9)
        [1]
        >>> all_minus_family(4, 6)
        [0, 2]
    """
    _check_modulus_order(m, n)
    return _linear_solutions(m, n - 2)


def all_minus_generator(m: int, n: int, d: int) -> ZmGenerator:
    """Generador circ_n(d, -1, ..., -1) sobre Z_m."""
    return ZmGenerator.from_signs(m, d, [-1] * (n - 1))


def one_plus_family(m: int, n: int) -> List[int]:
    """
    Valores de d para (d, -1, ..., -1, 1, -1, ..., -1) con el +1 en n/2.

    Deben cumplirse a la vez 2d ≡ -n+2 y 2d ≡ n-6 (mod m); si las
    congruencias son incompatibles el resultado es vacío.

    Args:
        m: Módulo (≥ 2)
        n: Orden par

    Raises:
        DomainError: Si n es impar

    Example:
        >>> one_plus_family(8, 16)
        [1, 5]
    """
    _check_modulus_order(m, n)
    if n % 2:
        raise DomainError("la familia con un +1 requiere n par")
    first = set(_linear_solutions(m, 2 - n))
    return [d for d in _linear_solutions(m, n - 6) if d in first]


def one_plus_generator(m: int, n: int, d: int) -> ZmGenerator:
    """Generador (d, -1, ..., -1, 1, -1, ..., -1) con el +1 en la posición n/2."""
    if n % 2:
        raise DomainError("la familia con un +1 requiere n par")
    signs = [-1] * (n - 1)
    signs[n // 2 - 1] = 1
    return ZmGenerator.from_signs(m, d, signs)


def one_plus_order_family(m: int, ell_max: int) -> OnePlusOrderFamily:
    """
    Órdenes n = step·ℓ + 4 (0 ≤ ℓ ≤ ell_max) de la familia con un +1.

    Las dos congruencias son compatibles si y solo si n ≡ 4 (mod m/mcd(2, m)),
    de modo que step = m para m impar y step = m/2 para m par. Los ℓ que dan
    n impar se descartan y se devuelven en `skipped`.

    Example:
        >>> one_plus_order_family(7, 2).orders
        [(4, [6]), (18, [6])]
    """
    if m < 2:
        raise DomainError("el módulo m debe ser ≥ 2")
    if ell_max < 0:
        raise DomainError("ell_max debe ser ≥ 0")
    step = m // 2 if m % 2 == 0 else m
    family = OnePlusOrderFamily(m=m, step=step)
    for ell in range(ell_max + 1):
        n = step * ell + 4
        if n % 2:
            family.skipped.append(ell)
            continue
        values = one_plus_family(m, n)
        if values:
            family.orders.append((n, values))
    return family


# ===== BÚSQUEDA EXHAUSTIVA =====


def _sign_patterns(n: int, symmetric_only: bool) -> np.ndarray:
    # Filas de signos ±1 para c_1..c_{n-1}; bit a 1 → -1
    if not symmetric_only:
        bits = np.array(list(itertools.product((0, 1), repeat=n - 1)), dtype=np.int64).reshape(-1, n - 1)
        return 1 - 2 * bits
    free = n // 2
    bits = np.array(list(itertools.product((0, 1), repeat=free)), dtype=np.int64).reshape(-1, free)
    half = 1 - 2 * bits
    signs = np.empty((half.shape[0], n - 1), dtype=np.int64)
    for k in range(1, free + 1):
        signs[:, k - 1] = half[:, k - 1]
        signs[:, n - k - 1] = half[:, k - 1]
    return signs


def _scan_diagonal(task: Tuple[int, int, int, bool]) -> List[Tuple[int, ...]]:
    """
    Recorre todos los patrones de signos para un valor de d.

    Args:
        task: (m, n, d, symmetric_only)

    Returns:
        Lista de offdiag canónicos que cumplen las congruencias
    """
    m, n, d, symmetric_only = task
    signs = _sign_patterns(n, symmetric_only)
    rows = np.concatenate([np.full((signs.shape[0], 1), d, dtype=np.int64), signs], axis=1)
    ok = np.ones(rows.shape[0], dtype=bool)
    for k in range(1, n):
        # Producto de la fila 0 con la fila k: Σ_j c_j c_{j-k}
        ok &= np.sum(rows * np.roll(rows, k, axis=1), axis=1) % m == 0
    return [tuple(int(v) % m for v in row[1:]) for row in rows[ok]]


def search_zm(
    m: int,
    n: int,
    symmetric_only: bool = False,
    workers: int = 1,
    logger: Optional[RunLogger] = None,
) -> List[ZmGenerator]:
    """
    Búsqueda exhaustiva sobre d ∈ Z_m y entradas ±1 fuera de la diagonal.

    Con symmetric_only solo se recorren generadores con c_k = c_{n-k}. La
    búsqueda no se salta los pares excluidos por paridad, de modo que el
    resultado vacío para m par y n impar es una comprobación real. Para
    m = 2 los signos +1 y -1 coinciden y los duplicados se eliminan.

    Args:
        m: Módulo (≥ 2)
        n: Orden, ≤ 24 con symmetric_only y ≤ 16 en general
        symmetric_only: Restringir a generadores simétricos
        workers: Procesos; se reparte por valores de d
        logger: RunLogger opcional

    Returns:
        Generadores que cumplen verify_zm, ordenados por d y por patrón

    Raises:
        SearchLimitError: Si n supera el límite de coste

    Example:
        >>> ZmGenerator(3, 4, 2, (1, 1, 1)) in search_zm(3, 4)
        True
    """
    _check_modulus_order(m, n)
    limit = ZM_MAX_ORDER_SYMMETRIC if symmetric_only else ZM_MAX_ORDER_GENERAL
    if n > limit:
        raise SearchLimitError(f"search_zm admite n ≤ {limit} (symmetric_only={symmetric_only})")
    tasks = [(m, n, d, symmetric_only) for d in range(m)]
    if workers <= 1 or len(tasks) <= 1:
        chunks = [_scan_diagonal(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(_scan_diagonal, tasks))

    results: List[ZmGenerator] = []
    seen = set()
    for (_, _, d, _), offdiags in zip(tasks, chunks):
        for offdiag in offdiags:
            if (d, offdiag) in seen:
                continue
            seen.add((d, offdiag))
            results.append(ZmGenerator(m, n, d, offdiag))
    if logger:
        kind = "simétricos" if symmetric_only else "generales"
        logger.log(f"Z_{m}, orden {n}: {len(results)} generadores {kind}", "success" if results else "warning")
    return results
