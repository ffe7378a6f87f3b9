"""
Filtros de admisibilidad para pares (n, d) y construcciones explícitas.

Este módulo agrupa:
    - Candidatos de d para órdenes pares (ℓ = √(d²+n-1) = n/(2k))
    - Filtros aritméticos para d entero (integralidad y divisibilidad de ℓ,
      casos n-1 primo, n/2 primo, semiprimo o potencia de primo, d = 0 y d = 1)
    - La construcción trivial circ_n(n/2 - 1, -ω^ν, -ω^{2ν}, ...)
    - Las formas con entradas en {1, -1, i, -i} y su oráculo por fuerza bruta
    - La clasificación exists / open / excluded de un par (n, d)

Identificadores de reglas (formato JSON de FilterVerdict):
    P3.2i, P3.2ii, P3.3i, P3.3ii, P3.3iii, P3.3iv, C3.4, C3.5, C3.6, P3.7, P3.8;
    además TRACE (identidad de la traza) y SEARCH (búsqueda exhaustiva).

Dependencias:
    - fractions: Valores exactos de d y d²
    - itertools: Enumeración de patrones cuaternarios
"""
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set, Tuple

from circortho.config import CLASSIFY_SEARCH_MAX_ORDER, ORACLE_MAX_ORDER, default_tol
from circortho.core import DiagonalValue, Generator, is_perfect_square, rational_to_str, to_rational
from circortho.errors import DomainError, SearchLimitError
from circortho.event_logger import RunLogger

# Textos legibles de cada regla
RULE_TEXTS: Dict[str, str] = {
    "P3.2i": "para n par, √(d²+n-1) debe ser n/(2k) con 1 ≤ k ≤ n/(2√(n-1))",
    "P3.2ii": "para n par, d debe ser racional",
    "P3.3i": "d²+n-1 debe ser un cuadrado perfecto",
    "P3.3ii": "ℓ debe dividir a n/2",
    "P3.3iii": "ℓ debe dividir a d²-1 (y 2ℓ si d es impar)",
    "P3.3iv": "si n-1 es primo, d = n/2 - 1",
    "C3.4": "con d = 0 solo existe n = 2",
    "C3.5": "con d = 1, n debe ser el cuadrado de un entero par",
    "C3.6": "si n/2 es primo, n = 2d + 2",
    "P3.7": "si n/2 es producto de dos primos, n = 2d + 2",
    "P3.8": "si n/2 es potencia de un primo y d ≥ 2, n = 2d + 2",
    "TRACE": "d² debe valer t²(n-1)/(n²-t²) con t ≡ n (mod 2)",
    "SEARCH": "la búsqueda espectral exhaustiva no encuentra solución",
}

# Excepciones publicadas para n par en {22, ..., 100}: n -> d
PUBLISHED_EVEN_EXCEPTIONS: Dict[int, str] = {
    36: "1", 40: "7/3", 56: "17/3", 64: "1", 66: "7/4",
    70: "11/4", 78: "17/4", 96: "7", 100: "1",
}

STATUS_EXISTS = "exists"
STATUS_OPEN = "open"
STATUS_EXCLUDED = "excluded"


@dataclass
class FilterVerdict:
    """
    Veredicto de los filtros aritméticos para un par (n, d).

    Attributes:
        allowed: False si alguna regla excluye el par
        reasons: Reglas violadas como (identificador, texto)
        derived: Valores intermedios (ell, k, factorización de n/2, reglas comprobadas)
    """

    allowed: bool
    reasons: List[Tuple[str, str]] = field(default_factory=list)
    derived: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Representación JSON del veredicto."""
        return {
            "allowed": self.allowed,
            "reasons": [{"rule": rule, "text": text} for rule, text in self.reasons],
            "derived": self.derived,
        }


@dataclass(frozen=True)
class EvenCandidate:
    """
    Candidato de d para un orden par.

    Attributes:
        k: Entero con √(d²+n-1) = n/(2k)
        d: Valor diagonal correspondiente
        excluded: True si d es irracional
    """

    k: int
    d: DiagonalValue
    excluded: bool


@dataclass(frozen=True)
class QuaternaryForm:
    """
    Generador con entradas fuera de la diagonal en {1, -1, i, -i}.

    Attributes:
        generator: Generador exacto (enteros gaussianos)
        d: Valor diagonal
        conjectural: True si la completitud de la lista depende de la conjetura
                     circulante de Hadamard generalizada (d entero impar)
        label: Nombre corto de la forma
    """

    generator: Generator
    d: DiagonalValue
    conjectural: bool
    label: str


@dataclass
class PairStatus:
    """
    Estado de existencia de un par (n, d).

    Attributes:
        n: Orden
        d: Valor diagonal
        status: "exists", "open" o "excluded"
        reasons: Reglas o testigos que justifican el estado
    """

    n: int
    d: DiagonalValue
    status: str
    reasons: List[Tuple[str, str]] = field(default_factory=list)


# ===== ARITMÉTICA =====


def factorize(value: int) -> Dict[int, int]:
    """
    Factorización por división de prueba.

    Example:
        >>> factorize(105)
        {3: 1, 5: 1, 7: 1}
    """
    if value < 1:
        raise DomainError("solo se factorizan enteros positivos")
    factors: Dict[int, int] = {}
    remaining = value
    divisor = 2
    while divisor * divisor <= remaining:
        while remaining % divisor == 0:
            factors[divisor] = factors.get(divisor, 0) + 1
            remaining //= divisor
        divisor += 1 if divisor == 2 else 2
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return factors


def is_prime(value: int) -> bool:
    """True si value es primo."""
    return value >= 2 and factorize(value) == {value: 1}


# ===== ÓRDENES PARES =====


def _check_even(n: int) -> None:
    if n < 2 or n % 2:
        raise DomainError(f"se requiere un orden par n ≥ 2, recibido {n}")


def even_order_candidates(n: int) -> List[EvenCandidate]:
    """
    Valores de d compatibles con √(d²+n-1) = n/(2k) para n par.

    k recorre 1 ≤ k ≤ n/(2√(n-1)), es decir 4k²(n-1) ≤ n². Los d irracionales
    se marcan como excluidos.

    Args:
        n: Orden par ≥ 2

    Returns:
        Lista de candidatos en orden creciente de k

    Raises:
        DomainError: Si n es impar

    Example:
        >>> [(c.k, str(c.d.d_squared)) for c in even_order_candidates(16)]
        [(1, '49'), (2, '1')]
    """
    _check_even(n)
    candidates = []
    k = 1
    while 4 * k * k * (n - 1) <= n * n:
        d_squared = Fraction(n, 2 * k) ** 2 - n + 1
        if d_squared >= 0:
            d = DiagonalValue.from_d_squared(d_squared)
            candidates.append(EvenCandidate(k, d, excluded=not d.is_rational))
        k += 1
    return candidates


def integer_d_filter(n: int, d: int) -> FilterVerdict:
    """
    Filtros aritméticos para un orden par n y un d entero.

    Se evalúan todas las reglas en orden y se informan todas las violadas:
        P3.3i   d²+n-1 = ℓ² con ℓ entero
        P3.3ii  ℓ | n/2
        P3.3iii ℓ | d²-1; si d es impar, 2ℓ | d²-1
        P3.3iv  n-1 primo ⇒ d = n/2 - 1
        C3.6    n/2 primo ⇒ n = 2d+2
        P3.7    n/2 producto de dos primos ⇒ n = 2d+2
        P3.8    n/2 potencia de primo y d ≥ 2 ⇒ n = 2d+2
        C3.4    d = 0 ⇒ n = 2
        C3.5    d = 1 ⇒ n es el cuadrado de un entero par

    Args:
        n: Orden par ≥ 2
        d: Entero no negativo

    Returns:
        FilterVerdict con allowed = True si ninguna regla se viola

    Example:
        >>> integer_d_filter(210, 4).allowed
        True
        >>> integer_d_filter(12, 0).allowed
        False
    """
    _check_even(n)
    if d < 0:
        raise DomainError("d debe ser no negativo")
    reasons: List[Tuple[str, str]] = []
    half = n // 2
    factors = factorize(half)
    omega = sum(factors.values())
    derived: Dict[str, Any] = {
        "n_half_factorization": {str(p): e for p, e in factors.items()},
        "rules_checked": [],
    }

    def check(rule: str, ok: bool) -> None:
        derived["rules_checked"].append(rule)
        if not ok:
            reasons.append((rule, RULE_TEXTS[rule]))

    square = d * d + n - 1
    ell = math.isqrt(square)
    ell_integral = ell * ell == square
    check("P3.3i", ell_integral)
    if ell_integral:
        derived["ell"] = ell
        check("P3.3ii", half % ell == 0)
        if half % ell == 0:
            derived["k"] = half // ell
        divisor = 2 * ell if d % 2 else ell
        check("P3.3iii", (d * d - 1) % divisor == 0)

    trivial = n == 2 * d + 2
    if is_prime(n - 1):
        check("P3.3iv", trivial)
    if omega == 1:
        check("C3.6", trivial)
    if omega == 2:
        check("P3.7", trivial)
    if len(factors) == 1 and d >= 2:
        check("P3.8", trivial)
    if d == 0:
        check("C3.4", n == 2)
    if d == 1:
        root = math.isqrt(n)
        check("C3.5", root * root == n and root % 2 == 0)

    return FilterVerdict(allowed=not reasons, reasons=reasons, derived=derived)


def admissible_even_orders(d: int, n_max: int) -> List[int]:
    """
    Órdenes pares n ≤ n_max que superan `integer_d_filter` para d.

    Example:
        >>> admissible_even_orders(5, 500)
        [12, 120]
    """
    if n_max < 2:
        raise DomainError("n_max debe ser ≥ 2")
    return [n for n in range(2, n_max + 1, 2) if integer_d_filter(n, d).allowed]


def even_order_exceptions(
    n_min: int,
    n_max: int,
    logger: Optional[RunLogger] = None,
) -> List[Tuple[int, DiagonalValue]]:
    """
    Pares (n, d) con n par, d racional y d ≠ n/2 - 1 que sobreviven al filtro de k.

    La lista se recalcula siempre; si el rango cubre {22, ..., 100} se compara
    con la lista publicada y las discrepancias se informan como advertencia.

    Args:
        n_min: Orden mínimo (inclusive)
        n_max: Orden máximo (inclusive)
        logger: RunLogger opcional

    Returns:
        Lista de (n, d) en orden creciente de n y k
    """
    exceptions = []
    start = max(2, n_min + (n_min % 2))
    for n in range(start, n_max + 1, 2):
        for candidate in even_order_candidates(n):
            if candidate.k >= 2 and not candidate.excluded:
                exceptions.append((n, candidate.d))
    if logger and n_min <= 22 and n_max >= 100:
        computed = {
            n: rational_to_str(d.exact_rational)
            for n, d in exceptions
            if 22 <= n <= 100 and d.exact_rational is not None
        }
        if computed != PUBLISHED_EVEN_EXCEPTIONS:
            logger.log(RunLogger.format_discrepancy(PUBLISHED_EVEN_EXCEPTIONS, computed), "warning")
    return exceptions


# ===== CONSTRUCCIONES =====


def _unit_root(exponent: int, n: int) -> complex:
    # ω^exponent con el exponente reducido módulo n; exacto para múltiplos de n/4
    reduced = exponent % n
    if (4 * reduced) % n == 0:
        return (1, 1j, -1, -1j)[(4 * reduced) // n]
    angle = 2 * math.pi * reduced / n
    return complex(math.cos(angle), math.sin(angle))


def trivial_construction(n: int, nu: int) -> Generator:
    """
    Solución hermítica circ_n(n/2 - 1, -ω^ν, -ω^{2ν}, ..., -ω^{(n-1)ν}).

    Sus autovalores son n/2 salvo λ_{-ν} = -n/2, por lo que cumple las
    condiciones con d = n/2 - 1 para todo n ≥ 2 y todo ν.

    Args:
        n: Orden (≥ 2)
        nu: Índice 0 ≤ ν < n

    Returns:
        Generador de la construcción

    Example:
        >>> trivial_construction(6, 0).entries
        (2, -1, -1, -1, -1, -1)  # como complejos
    """
    if n < 2:
        raise DomainError("la construcción trivial requiere n ≥ 2")
    if not 0 <= nu < n:
        raise DomainError(f"ν debe estar en [0, {n})")
    diagonal = n / 2 - 1
    return Generator.from_values([diagonal] + [-_unit_root(j * nu, n) for j in range(1, n)])


def trivial_diagonal(n: int) -> DiagonalValue:
    """Valor d = n/2 - 1 de la construcción trivial."""
    return DiagonalValue.from_rational(Fraction(n, 2) - 1)


def quaternary_forms(d: DiagonalValue) -> List[QuaternaryForm]:
    """
    Generadores hermíticos con entradas en {1, -1, i, -i} para un d dado.

    Solo existen para 2d entero, con orden n = 2d+2:
        - d semientero: circ(d, -1, ..., -1)
        - d entero par: además circ(d, 1, -1, 1, ..., -1, 1)
        - d entero impar: además las dos formas complejas conjugadas de
          periodo 4 (d, ±i, 1, ∓i, -1, ...); todas marcadas como conjeturales

    Args:
        d: Valor diagonal

    Returns:
        Lista de formas (vacía si 2d no es entero)

    Example:
        >>> len(quaternary_forms(DiagonalValue.from_rational(2)))
        2
    """
    if d.exact_rational is None or (2 * d.exact_rational).denominator != 1:
        return []
    value = d.exact_rational
    n = int(2 * value + 2)
    half_integer = value.denominator == 2
    odd = not half_integer and value.numerator % 2 == 1
    diagonal = float(value)

    def form(entries: List[complex], label: str) -> QuaternaryForm:
        return QuaternaryForm(Generator.from_values([diagonal] + entries), d, odd, label)

    forms = [form([-1] * (n - 1), "all-minus")]
    if half_integer:
        return forms
    forms.append(form([-((-1) ** j) for j in range(1, n)], "alternating"))
    if odd:
        forms.append(form([-((-1j) ** j) for j in range(1, n)], "complex-plus-i"))
        forms.append(form([-((1j) ** j) for j in range(1, n)], "complex-minus-i"))
    return forms


def _hermitian_quaternary_patterns(n: int):
    units = (1, -1, 1j, -1j)
    free = (n - 1) // 2
    middle = (1, -1) if n % 2 == 0 else (None,)
    for head in itertools.product(units, repeat=free):
        for centre in middle:
            entries = [0j] * n
            for j, value in enumerate(head, start=1):
                entries[j] = complex(value)
                entries[n - j] = complex(value).conjugate()
            if centre is not None:
                entries[n // 2] = complex(centre)
            yield entries


def _common_diagonal_root(entries: List[complex]) -> Optional[Fraction]:
    # Producto fila 0 · fila k = 2d·c_k + S_k (afín en d para generadores hermíticos)
    n = len(entries)
    root: Optional[Fraction] = None
    for k in range(1, n):
        constant = sum(
            entries[j] * entries[(j - k) % n].conjugate()
            for j in range(1, n)
            if j != k
        )
        # d = -S_k / (2 c_k) = -S_k · conj(c_k) / 2
        value = -constant * entries[k].conjugate()
        if round(value.imag) != 0:
            return None
        candidate = Fraction(int(round(value.real)), 2)
        if root is None:
            root = candidate
        elif candidate != root:
            return None
    return root


def quaternary_oracle(n: int, tol: Optional[float] = None) -> List[Tuple[DiagonalValue, Generator]]:
    """
    Enumeración exhaustiva de generadores hermíticos cuaternarios de orden n.

    Para cada patrón con c_j ∈ {1, -1, i, -i} y c_j = conj(c_{n-j}), los
    productos de la fila 0 con la fila k son funciones afines de d; se
    devuelven los patrones con una raíz común d ≥ 0. Los cálculos son exactos
    (enteros gaussianos); la tolerancia solo se usa en la verificación final.

    Args:
        n: Orden, 2 ≤ n ≤ 12
        tol: Tolerancia de la verificación final

    Returns:
        Lista de (d, generador) en orden de enumeración

    Raises:
        DomainError: Si n < 2
        SearchLimitError: Si n > 12
    """
    from circortho.spectral import verify_conditions

    if tol is None:
        tol = default_tol()
    if n < 2:
        raise DomainError("el oráculo requiere n ≥ 2")
    if n > ORACLE_MAX_ORDER:
        raise SearchLimitError(f"el oráculo cuaternario admite n ≤ {ORACLE_MAX_ORDER}")
    results = []
    for entries in _hermitian_quaternary_patterns(n):
        root = _common_diagonal_root(entries)
        if root is None or root < 0:
            continue
        entries[0] = complex(float(root))
        generator = Generator.from_values(entries)
        d = DiagonalValue.from_rational(root)
        if verify_conditions(generator, d, tol).passes:
            results.append((d, generator))
    return results


# ===== CLASIFICACIÓN =====


def _trace_admissible(n: int, d: DiagonalValue) -> bool:
    # d² = t²(n-1)/(n²-t²)  ⇔  t² = n²d²/(d²+n-1)
    t_squared = n * n * d.d_squared / (d.d_squared + n - 1)
    t = is_perfect_square(t_squared)
    return t is not None and t.denominator == 1 and (t.numerator - n) % 2 == 0 and t < n


def classify_pair(
    n: int,
    d: DiagonalValue,
    witnesses: Optional[Set[Tuple[int, Fraction]]] = None,
    search_max_order: int = CLASSIFY_SEARCH_MAX_ORDER,
    workers: int = 1,
) -> PairStatus:
    """
    Estado de existencia de una matriz hermítica de orden n con diagonal d.

    Orden de decisión:
        1. d = n/2 - 1: existe (construcción trivial)
        2. Testigo en el catálogo: existe
        3. Identidad de la traza y, para n par, candidatos de k y racionalidad
        4. Para d entero y n par, filtros aritméticos
        5. Para n ≤ search_max_order, búsqueda restringida a la clase de d
        6. En otro caso: abierto

    Args:
        n: Orden (≥ 2)
        d: Valor diagonal
        witnesses: Conjunto de (n, d²) con solución conocida (catálogo)
        search_max_order: Orden máximo resuelto por búsqueda
        workers: Procesos para la búsqueda

    Returns:
        PairStatus con el estado y las razones
    """
    from circortho.search import search_order

    if n < 2:
        raise DomainError("el orden debe ser ≥ 2")
    if d.d_squared == trivial_diagonal(n).d_squared:
        return PairStatus(n, d, STATUS_EXISTS, [("TRIVIAL", "construcción trivial circ_n(n/2-1, -ω^ν, ...)")])
    if witnesses and (n, d.d_squared) in witnesses:
        return PairStatus(n, d, STATUS_EXISTS, [("CATALOG", "testigo en el catálogo")])

    reasons: List[Tuple[str, str]] = []
    if not _trace_admissible(n, d):
        reasons.append(("TRACE", RULE_TEXTS["TRACE"]))
    if n % 2 == 0:
        if not d.is_rational:
            reasons.append(("P3.2ii", RULE_TEXTS["P3.2ii"]))
        if all(c.d.d_squared != d.d_squared for c in even_order_candidates(n)):
            reasons.append(("P3.2i", RULE_TEXTS["P3.2i"]))
        if d.exact_rational is not None and d.exact_rational.denominator == 1:
            verdict = integer_d_filter(n, int(d.exact_rational))
            reasons.extend(verdict.reasons)
    if reasons:
        return PairStatus(n, d, STATUS_EXCLUDED, reasons)

    if n <= search_max_order:
        result = search_order(n, restrict_d=d, workers=workers)
        if len(result):
            return PairStatus(n, d, STATUS_EXISTS, [("SEARCH", "solución encontrada por búsqueda espectral")])
        return PairStatus(n, d, STATUS_EXCLUDED, [("SEARCH", RULE_TEXTS["SEARCH"])])
    return PairStatus(n, d, STATUS_OPEN, [])


def classify_even_order(n: int, **kwargs: Any) -> List[PairStatus]:
    """
    Clasifica todos los candidatos de d para un orden par.

    Los candidatos irracionales se informan como excluidos (P3.2ii).

    Args:
        n: Orden par ≥ 2
        **kwargs: Se pasan a `classify_pair`

    Returns:
        Un PairStatus por candidato, en orden creciente de k
    """
    statuses = []
    for candidate in even_order_candidates(n):
        if candidate.excluded:
            statuses.append(PairStatus(n, candidate.d, STATUS_EXCLUDED, [("P3.2ii", RULE_TEXTS["P3.2ii"])]))
        else:
            statuses.append(classify_pair(n, candidate.d, **kwargs))
    return statuses


def parse_diagonal(text: str) -> DiagonalValue:
    """
    Interpreta un d racional escrito como "p/q" o entero.

    Raises:
        DomainError: Si el texto no es un racional no negativo
    """
    try:
        value = to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"d no válido: {text!r}") from exc
    return DiagonalValue.from_rational(value)
