from fractions import Fraction

import numpy as np
import pytest

from circortho import search
from circortho.core import DiagonalValue
from circortho.errors import DomainError, SearchLimitError
from circortho.feasibility import trivial_construction
from circortho.search import (
    SignPattern,
    canonical_key,
    colex_unrank,
    search_order,
    search_order_unrestricted,
    spectrum_classes,
)
from circortho.spectral import eigenvalues

# Valores de d² por orden impar (tabla de resultados numéricos)
ODD_ORDER_TABLE = {
    3: {"1/4"},
    5: {"9/4"},
    7: {"25/4", "1/8"},
    9: {"49/4"},
    11: {"81/4", "1/12"},
    13: {"121/4", "25/12"},
    15: {"169/4", "1/16"},
    17: {"225/4"},
    19: {"289/4", "1/20"},
    21: {"361/4", "121/16"},
}


def _d_squared_set(result):
    return {d.d_squared for d in result.distinct_d()}


def test_spectrum_classes_of_order_seven():
    classes = spectrum_classes(7)
    assert [c.t for c in classes] == [1, 3, 5]
    assert [c.d.d_squared for c in classes] == [Fraction(1, 8), Fraction(27, 20), Fraction(25, 4)]
    assert [c.nu for c in classes] == [4, 5, 6]


def test_spectrum_classes_reject_small_order():
    with pytest.raises(DomainError):
        spectrum_classes(1)


def test_colex_rank_zero_is_first_subset():
    chosen = colex_unrank(np.array([0]), 4, 3)
    assert chosen.tolist() == [[True, True, True, False]]


def test_colex_unrank_is_a_bijection():
    chosen = colex_unrank(np.arange(20), 6, 3)
    assert chosen.sum(axis=1).tolist() == [3] * 20
    assert len({tuple(row) for row in chosen.tolist()}) == 20


def test_sign_pattern():
    pattern = SignPattern.from_signs([1, 1, 1, -1])
    assert pattern.nu == 3
    assert pattern.t == 2
    assert pattern.to_string() == "+++-"


@pytest.mark.parametrize(
    "n",
    [3, 5, 7, 9, 11, 13]
    + [pytest.param(n, marks=pytest.mark.slow) for n in (15, 17, 19, 21)],
)
def test_odd_orders_reproduce_table(n):
    result = search_order(n)
    assert _d_squared_set(result) == {Fraction(v) for v in ODD_ORDER_TABLE[n]}
    for solution in result:
        assert solution.residuals.passes
        assert solution.residuals.hermitian


@pytest.mark.parametrize(
    "n",
    [2, 4, 6, 8, 10, 12]
    + [pytest.param(n, marks=pytest.mark.slow) for n in (14, 16, 18, 20, 22)],
)
def test_even_orders_only_admit_trivial_diagonal(n):
    result = search_order(n)
    assert _d_squared_set(result) == {Fraction(n - 2, 2) ** 2}


def test_search_order_four_gives_hadamard_class():
    result = search_order(4)
    assert len(result) == 1
    assert result[0].d.exact_rational == 1
    assert result[0].pattern.nu == 3


def test_restricted_search_without_matching_class(quiet_logger):
    result = search_order(7, restrict_d=DiagonalValue.from_rational(1), logger=quiet_logger)
    assert not result.restrict_matched
    assert len(result) == 0
    assert quiet_logger.get_logs(event_type="warning")


def test_restricted_search_single_class():
    result = search_order(13, restrict_d=DiagonalValue.from_d_squared("25/12"))
    assert len(result) >= 1
    assert [c.t for c in result.classes_searched] == [5]


@pytest.mark.parametrize("n", [1, 27])
def test_search_order_rejects_out_of_range(n):
    with pytest.raises(DomainError):
        search_order(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_unrestricted_oracle_agrees(n):
    restricted = {s.canonical_key for s in search_order(n)}
    unrestricted = {s.canonical_key for s in search_order_unrestricted(n)}
    assert restricted == unrestricted


def test_unrestricted_oracle_limit():
    with pytest.raises(SearchLimitError):
        search_order_unrestricted(17)


def test_search_is_deterministic_across_worker_counts(monkeypatch):
    # Rangos pequeños para que haya varias tareas por clase
    monkeypatch.setattr(search, "SEARCH_CHUNK_SIZE", 8)
    serial = search_order(11, workers=1)
    parallel = search_order(11, workers=2)
    again = search_order(11, workers=1)
    assert [s.canonical_key for s in serial] == [s.canonical_key for s in parallel]
    assert [s.generator for s in serial] == [s.generator for s in again]
    assert serial.patterns_scanned == parallel.patterns_scanned


def test_canonical_key_is_invariant_under_rotation_and_conjugation():
    base = trivial_construction(4, 0)
    rotated = trivial_construction(4, 1)
    assert canonical_key(base) == canonical_key(rotated)
    assert canonical_key(rotated) == canonical_key(rotated.conjugate())


def test_canonical_key_separates_spectrum_classes():
    keys = {s.canonical_key for s in search_order(7)}
    assert len(keys) == len(search_order(7))
    assert len(keys) >= 2


def _class_d_squared(g):
    values = eigenvalues(g)
    assert np.max(np.abs(values.imag)) <= 1e-9
    t = 2 * int(np.sum(values.real > 0)) - g.n
    return t, Fraction(t * t * (g.n - 1), g.n * g.n - t * t)


@pytest.mark.parametrize("n", range(2, 14))
def test_every_solution_lies_in_its_spectrum_class(n):
    solutions = list(search_order(n))
    if n <= 8:
        solutions += search_order_unrestricted(n)
    for solution in solutions:
        t, d_squared = _class_d_squared(solution.generator)
        assert t == solution.pattern.t
        assert d_squared == solution.d.d_squared
        ell = np.sqrt(float(d_squared) + n - 1)
        np.testing.assert_allclose(np.abs(eigenvalues(solution.generator)), ell, atol=1e-9)


@pytest.mark.parametrize("n", range(2, 21, 2))
def test_trivial_constructions_lie_in_a_spectrum_class(n):
    for nu in range(n):
        t, d_squared = _class_d_squared(trivial_construction(n, nu))
        assert t == n - 2
        assert d_squared == Fraction(n - 2, 2) ** 2
