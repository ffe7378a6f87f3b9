"""
Búsqueda espectral exhaustiva de generadores hermíticos.

Una matriz hermítica C con C² = (d²+n-1)I tiene autovalores ±ℓ, con
ℓ = √(d²+n-1). La búsqueda recorre todos los vectores de signos
(λ_0, ..., λ_{n-1}) = ℓ·(s_0, ..., s_{n-1}), reconstruye el generador con la
DFT inversa y conserva los que tienen |c_j| = 1 fuera de la diagonal.

Clases espectrales:
    Si ν es el número de signos +1 y t = 2ν - n, la traza da tℓ = nd, de donde
    d² = t²(n-1)/(n²-t²). Cada t con 0 ≤ t < n y t ≡ n (mod 2) fija un d exacto.

Proceso:
    1. Para cada clase (o solo la pedida) se enumeran los subconjuntos de
       tamaño ν en orden colex, divididos en rangos contiguos de tamaño fijo
    2. Cada rango se procesa en bloque con numpy (posiblemente en otro proceso)
    3. Los supervivientes se verifican, se fusionan en orden de rango y se
       deduplican por clave canónica

Dependencias:
    - numpy: DFT inversa por lotes
    - concurrent.futures: Reparto de rangos entre procesos

Notas de implementación:
    - El espacio se reduce a ν ≥ n/2 (d ≥ 0): -C es solución si C lo es
    - d se toma siempre de la clase espectral, nunca se reajusta desde c_0
    - La fusión es determinista: mismo resultado con cualquier número de procesos
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from circortho.config import (
    SEARCH_CHUNK_SIZE,
    SEARCH_MAX_ORDER,
    SEARCH_MIN_ORDER,
    default_tol,
)
from circortho.core import DiagonalValue, Generator
from circortho.errors import DomainError, SearchLimitError
from circortho.event_logger import RunLogger
from circortho.spectral import VerificationReport, dft_matrix, verify_conditions

# Cuantización de fases para la clave canónica (10^-6 vueltas)
PHASE_QUANTUM: int = 10**6

# Límite del oráculo de fuerza bruta sobre los 2^n patrones
UNRESTRICTED_MAX_ORDER: int = 16


@dataclass(frozen=True)
class SignPattern:
    """
    Signos de los autovalores λ_k = s_k·ℓ.

    Attributes:
        n: Orden
        signs: Tupla de n valores en {+1, -1}
        nu: Número de signos +1
    """

    n: int
    signs: Tuple[int, ...]
    nu: int

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignPattern":
        """Construye el patrón contando los +1."""
        values = tuple(int(s) for s in signs)
        return cls(len(values), values, sum(1 for s in values if s > 0))

    @property
    def t(self) -> int:
        """Diferencia t = 2ν - n entre signos positivos y negativos."""
        return 2 * self.nu - self.n

    def to_string(self) -> str:
        """Patrón como texto, ej. '+++-'."""
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class SpectrumClass:
    """
    Clase de patrones que comparten t = 2ν - n y, por tanto, d.

    Attributes:
        n: Orden
        t: 0 ≤ t < n con t ≡ n (mod 2)
        d: Valor diagonal con d² = t²(n-1)/(n²-t²)
    """

    n: int
    t: int
    d: DiagonalValue

    @property
    def nu(self) -> int:
        """Número de autovalores positivos de la clase."""
        return (self.n + self.t) // 2

    @property
    def ell(self) -> float:
        """ℓ = √(d²+n-1), módulo común de todos los autovalores."""
        return math.sqrt(self.d.d_squared + self.n - 1)


@dataclass(frozen=True)
class Solution:
    """
    Generador encontrado por la búsqueda.

    Attributes:
        generator: Generador verificado
        d: Valor diagonal exacto de su clase espectral
        pattern: Patrón de signos del que procede
        residuals: Informe de verificación (passes = True)
        canonical_key: Huella invariante bajo rotación del patrón y conjugación
    """

    generator: Generator
    d: DiagonalValue
    pattern: SignPattern
    residuals: VerificationReport
    canonical_key: bytes


@dataclass
class SearchResult:
    """
    Resultado de `search_order`: secuencia de soluciones más diagnóstico.

    Se comporta como una secuencia de `Solution` (len, iteración, índice).

    Attributes:
        n: Orden buscado
        tol: Tolerancia usada
        solutions: Soluciones ordenadas por (d² descendente, clave)
        classes_searched: Clases espectrales recorridas
        patterns_scanned: Número total de patrones evaluados
        restrict_matched: False si restrict_d no correspondía a ninguna clase
    """

    n: int
    tol: float
    solutions: List[Solution] = field(default_factory=list)
    classes_searched: List[SpectrumClass] = field(default_factory=list)
    patterns_scanned: int = 0
    restrict_matched: bool = True

    def __iter__(self) -> Iterator[Solution]:
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def __getitem__(self, index: int) -> Solution:
        return self.solutions[index]

    def distinct_d(self) -> List[DiagonalValue]:
        """Valores d distintos encontrados, de mayor a menor."""
        seen: List[DiagonalValue] = []
        for solution in self.solutions:
            if solution.d not in seen:
                seen.append(solution.d)
        return seen


def spectrum_classes(n: int) -> List[SpectrumClass]:
    """
    Clases espectrales de orden n en orden creciente de t.

    Args:
        n: Orden (≥ 2)

    Returns:
        Una clase por cada t con 0 ≤ t < n y t ≡ n (mod 2)

    Raises:
        DomainError: Si n < 2

    Example:
        >>> [str(c.d.d_squared) for c in spectrum_classes(7)]
        ['1/8', '27/20', '25/4']
    """
    if n < 2:
        raise DomainError("las clases espectrales requieren n ≥ 2")
    classes = []
    for t in range(n % 2, n, 2):
        d_squared = Fraction(t * t * (n - 1), n * n - t * t)
        classes.append(SpectrumClass(n, t, DiagonalValue.from_d_squared(d_squared)))
    return classes


def canonical_key(g: Generator, tol: Optional[float] = None) -> bytes:
    """
    Clave invariante bajo rotación del patrón de signos y conjugación global.

    Rotar el patrón s posiciones multiplica c_j por ω^{js}; la conjugación
    global cambia el signo de todas las fases. Se cuantiza la fase de cada
    entrada a 10^-6 vueltas y se toma el mínimo lexicográfico de la órbita.
    El primer componente es |c_0| cuantizado, que separa clases con distinto d.

    Args:
        g: Generador verificado
        tol: Módulo por debajo del cual la fase de una entrada se toma como 0

    Returns:
        Clave como bytes ASCII (enteros separados por comas)
    """
    if tol is None:
        tol = default_tol()
    c = g.as_array()
    n = g.n
    modulus0 = int(round(abs(c[0]) * PHASE_QUANTUM))
    phases = np.where(np.abs(c) > tol, np.angle(c) / (2 * np.pi), 0.0)
    positions = np.arange(n)
    best: Optional[Tuple[int, ...]] = None
    for sign in (1.0, -1.0):
        for shift in range(n):
            turned = np.mod(sign * phases + positions * shift / n, 1.0)
            quantized = np.mod(np.rint(turned * PHASE_QUANTUM).astype(np.int64), PHASE_QUANTUM)
            candidate = (modulus0,) + tuple(int(q) for q in quantized)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return ",".join(str(v) for v in best).encode("ascii")


# ===== ENUMERACIÓN COLEX =====


def _binomial_tables(n: int, k: int) -> List[np.ndarray]:
    # tables[i][c] = C(c, i) para c = 0..n-1
    return [np.array([math.comb(c, i) for c in range(n)], dtype=np.int64) for i in range(k + 1)]


def colex_unrank(ranks: np.ndarray, n: int, k: int) -> np.ndarray:
    """
    Subconjuntos de tamaño k de {0..n-1} con los rangos colex dados.

    Usa el sistema combinatorio de numeración: rango = Σ_i C(c_i, i) con
    c_k > ... > c_1. Vectorizado sobre el lote de rangos.

    Args:
        ranks: Array de rangos en [0, C(n, k))
        n: Tamaño del conjunto base
        k: Tamaño de los subconjuntos

    Returns:
        Matriz booleana (len(ranks) × n) con True en los elementos elegidos
    """
    remaining = np.array(ranks, dtype=np.int64)
    chosen = np.zeros((remaining.shape[0], n), dtype=bool)
    tables = _binomial_tables(n, k)
    rows = np.arange(remaining.shape[0])
    for i in range(k, 0, -1):
        position = np.searchsorted(tables[i], remaining, side="right") - 1
        chosen[rows, position] = True
        remaining = remaining - tables[i][position]
    return chosen


def _chunk_ranges(total: int) -> List[Tuple[int, int]]:
    return [(start, min(start + SEARCH_CHUNK_SIZE, total)) for start in range(0, total, SEARCH_CHUNK_SIZE)]


def _candidate_generators(signs: np.ndarray, ell: float) -> np.ndarray:
    # Filas: c = (ℓ/n)·Σ_k s_k ω^{-jk}
    n = signs.shape[1]
    return (ell / n) * (signs.astype(np.complex128) @ dft_matrix(n).conj())


def _scan_range(task: Tuple[int, int, str, float, int, int]) -> List[Tuple[int, Tuple[complex, ...]]]:
    """
    Procesa un rango colex de una clase espectral.

    Args:
        task: (n, nu, d² como texto, tol, inicio, fin)

    Returns:
        Lista de (rango, entradas del generador) de los patrones que superan
        el filtro de unimodularidad
    """
    n, nu, d_squared_text, tol, start, stop = task
    ell = math.sqrt(Fraction(d_squared_text) + n - 1)
    ranks = np.arange(start, stop, dtype=np.int64)
    chosen = colex_unrank(ranks, n, nu)
    signs = np.where(chosen, 1, -1)
    generators = _candidate_generators(signs, ell)
    if n > 1:
        deviation = np.max(np.abs(np.abs(generators[:, 1:]) - 1.0), axis=1)
    else:
        deviation = np.zeros(generators.shape[0])
    survivors = np.nonzero(deviation <= tol)[0]
    return [(int(ranks[i]), tuple(complex(v) for v in generators[i])) for i in survivors]


def _run_tasks(tasks: List[tuple], workers: int) -> List[list]:
    if workers <= 1 or len(tasks) <= 1:
        return [_scan_range(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map conserva el orden de las tareas
        return list(executor.map(_scan_range, tasks))


def _match_class(classes: List[SpectrumClass], restrict_d: DiagonalValue) -> List[SpectrumClass]:
    return [c for c in classes if c.d.d_squared == restrict_d.d_squared]


def search_order(
    n: int,
    tol: Optional[float] = None,
    restrict_d: Optional[DiagonalValue] = None,
    workers: int = 1,
    logger: Optional[RunLogger] = None,
) -> SearchResult:
    """
    Búsqueda exhaustiva de generadores hermíticos de orden n.

    Args:
        n: Orden, 2 ≤ n ≤ 26
        tol: Tolerancia de pertenencia y verificación (default: CIRCORTHO_TOL)
        restrict_d: Si se indica, solo se recorre la clase con ese d²
        workers: Número de procesos (1 = sin paralelismo)
        logger: RunLogger opcional para informar del progreso

    Returns:
        SearchResult con las soluciones deduplicadas y ordenadas por
        (d² descendente, clave canónica)

    Raises:
        DomainError: Si n está fuera de rango o tol ≤ 0
    """
    if tol is None:
        tol = default_tol()
    if tol <= 0:
        raise DomainError("la tolerancia debe ser positiva")
    if not SEARCH_MIN_ORDER <= n <= SEARCH_MAX_ORDER:
        raise DomainError(f"el orden debe estar entre {SEARCH_MIN_ORDER} y {SEARCH_MAX_ORDER}, recibido {n}")

    classes = spectrum_classes(n)
    result = SearchResult(n=n, tol=tol)
    if restrict_d is not None:
        classes = _match_class(classes, restrict_d)
        if not classes:
            result.restrict_matched = False
            if logger:
                logger.log(RunLogger.format_no_class(n, restrict_d), "warning")
            return result

    if logger:
        logger.log(RunLogger.format_search_start(n, len(classes), workers))

    found: dict = {}
    for spectrum_class in classes:
        total = math.comb(n, spectrum_class.nu)
        d_text = str(spectrum_class.d.d_squared)
        tasks = [(n, spectrum_class.nu, d_text, tol, start, stop) for start, stop in _chunk_ranges(total)]
        result.patterns_scanned += total
        result.classes_searched.append(spectrum_class)
        for chunk in _run_tasks(tasks, workers):
            for rank, entries in chunk:
                solution = _build_solution(n, spectrum_class, rank, entries, tol)
                if solution is not None and solution.canonical_key not in found:
                    found[solution.canonical_key] = solution

    result.solutions = _sorted_solutions(found.values())
    if logger:
        logger.log(RunLogger.format_search_done(n, len(result.solutions), len(result.distinct_d())), "success")
    return result


def _build_solution(
    n: int,
    spectrum_class: SpectrumClass,
    rank: int,
    entries: Tuple[complex, ...],
    tol: float,
) -> Optional[Solution]:
    generator = Generator(n, entries)
    report = verify_conditions(generator, spectrum_class.d, tol)
    if not report.passes:
        return None
    chosen = colex_unrank(np.array([rank], dtype=np.int64), n, spectrum_class.nu)[0]
    pattern = SignPattern.from_signs(np.where(chosen, 1, -1))
    return Solution(generator, spectrum_class.d, pattern, report, canonical_key(generator, tol))


def _sorted_solutions(solutions) -> List[Solution]:
    return sorted(solutions, key=lambda s: (-s.d.d_squared, s.canonical_key))


def search_order_unrestricted(n: int, tol: Optional[float] = None) -> List[Solution]:
    """
    Oráculo de fuerza bruta: recorre los 2^n patrones sin restringir ν.

    Para cada patrón con |t| < n se reconstruye el generador con d = tℓ/n y
    se descartan después los que tienen d < 0. Sirve para validar la
    reducción ν ≥ n/2 de `search_order`.

    Args:
        n: Orden, 2 ≤ n ≤ 16
        tol: Tolerancia

    Returns:
        Soluciones deduplicadas, en el mismo orden que `search_order`

    Raises:
        SearchLimitError: Si n > 16
    """
    if tol is None:
        tol = default_tol()
    if n < SEARCH_MIN_ORDER:
        raise DomainError("el orden debe ser ≥ 2")
    if n > UNRESTRICTED_MAX_ORDER:
        raise SearchLimitError(f"el oráculo sin restricciones admite n ≤ {UNRESTRICTED_MAX_ORDER}")

    masks = np.arange(1 << n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    plus_counts = bits.sum(axis=1)
    found: dict = {}
    for t in range(-n + 1, n):
        if (t + n) % 2:
            continue
        nu = (n + t) // 2
        d_squared = Fraction(t * t * (n - 1), n * n - t * t)
        ell = math.sqrt(d_squared + n - 1)
        rows = np.nonzero(plus_counts == nu)[0]
        signs = np.where(bits[rows], 1, -1)
        generators = _candidate_generators(signs, ell)
        deviation = np.max(np.abs(np.abs(generators[:, 1:]) - 1.0), axis=1)
        for row, entries, gap in zip(rows, generators, deviation):
            if gap > tol or entries[0].real < -tol:
                continue
            generator = Generator.from_values(entries)
            d = DiagonalValue.from_d_squared(d_squared)
            report = verify_conditions(generator, d, tol)
            if not report.passes:
                continue
            key = canonical_key(generator, tol)
            if key in found:
                continue
            pattern = SignPattern.from_signs(np.where(bits[row], 1, -1))
            found[key] = Solution(generator, d, pattern, report, key)
    return _sorted_solutions(found.values())
