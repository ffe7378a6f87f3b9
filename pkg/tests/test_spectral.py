import itertools

import numpy as np
import pytest

from circortho.core import DiagonalValue, Generator
from circortho.errors import DomainError
from circortho.feasibility import quaternary_forms, trivial_construction, trivial_diagonal
from circortho.search import search_order
from circortho.spectral import (
    approximate_trivial_solution,
    autocorrelation,
    circulant_matrix,
    dft_matrix,
    eigenvalues,
    generator_from_eigenvalues,
    is_hermitian,
    row_inner_products,
    rows_residual,
    spectral_residual,
    verify_conditions,
)


def test_eigenvalues_of_all_minus_generator():
    values = eigenvalues(Generator.from_values([1, -1, -1, -1]))
    np.testing.assert_allclose(values, [-2, 2, 2, 2], atol=1e-12)


def test_inverse_dft_recovers_hadamard_generator(hadamard4):
    recovered = generator_from_eigenvalues([2, 2, 2, -2])
    np.testing.assert_allclose(recovered.as_array(), hadamard4.as_array(), atol=1e-12)


def test_dft_round_trip_on_random_generators():
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        n = int(rng.integers(1, 33))
        values = rng.normal(size=n) + 1j * rng.normal(size=n)
        g = Generator.from_values(values)
        back = generator_from_eigenvalues(eigenvalues(g))
        assert np.max(np.abs(back.as_array() - values)) <= 1e-9


def test_dft_matrix_is_read_only():
    table = dft_matrix(5)
    assert not table.flags.writeable
    with pytest.raises(DomainError):
        dft_matrix(0)


def test_circulant_rows_are_right_shifts():
    matrix = circulant_matrix(Generator.from_values([1, 2, 3]))
    np.testing.assert_array_equal(matrix.real, [[1, 2, 3], [3, 1, 2], [2, 3, 1]])


def test_verify_conditions_accepts_trivial_solution():
    report = verify_conditions(Generator.from_values([2, -1, -1, -1, -1, -1]), DiagonalValue.from_rational(2))
    assert report.passes
    assert report.hermitian
    assert report.method == "rows"


def test_verify_conditions_rejects_perturbed_generator():
    entries = list(trivial_construction(8, 3).entries)
    entries[2] = -entries[2]
    report = verify_conditions(Generator.from_values(entries), trivial_diagonal(8))
    assert not report.passes
    assert report.gram_residual > 1e-6


def test_verify_conditions_argument_errors(hadamard4):
    d = DiagonalValue.from_rational(1)
    with pytest.raises(DomainError):
        verify_conditions(hadamard4, d, tol=0)
    with pytest.raises(DomainError):
        verify_conditions(hadamard4, d, method="cholesky")


def _path_inputs(rng):
    """Un tercio de soluciones exactas; el resto con una fase movida o con fases aleatorias."""
    for i in range(1000):
        n = int(rng.integers(2, 33))
        d = trivial_diagonal(n)
        entries = list(trivial_construction(n, int(rng.integers(0, n))).entries)
        if i % 3 == 1:
            j = int(rng.integers(1, n))
            entries[j] = entries[j] * np.exp(1j * rng.uniform(1e-3, 1.0))
        elif i % 3 == 2:
            entries[1:] = np.exp(2j * np.pi * rng.random(n - 1))
        yield Generator.from_values(entries), d


def test_rows_and_spectral_paths_agree():
    rng = np.random.default_rng(20240602)
    for g, d in _path_inputs(rng):
        rows = verify_conditions(g, d, method="rows")
        spectral = verify_conditions(g, d, method="spectral")
        assert rows.passes == spectral.passes, g
        # máximo de las entradas frente a máximo de los autovalores del mismo error circulante
        slack = 1e-9 * (1 + spectral.gram_residual)
        assert rows.gram_residual <= spectral.gram_residual + slack
        assert spectral.gram_residual <= g.n * rows.gram_residual + g.n * slack


def test_verification_report_dict_round_trip(hadamard4):
    report = verify_conditions(hadamard4, DiagonalValue.from_rational(1))
    assert type(report).from_dict(report.to_dict()) == report


def test_row_inner_products_of_trivial_solution():
    products = row_inner_products(trivial_construction(6, 0))
    np.testing.assert_allclose(products, [9, 0, 0, 0, 0, 0], atol=1e-12)


def test_is_hermitian():
    assert is_hermitian(Generator.from_values([1, -1j, 1, 1j]), 1e-9)
    assert not is_hermitian(Generator.from_values([1, 1j, 1j]), 1e-9)


def test_autocorrelation():
    assert autocorrelation([1, 1j, -1, -1j], 1) == pytest.approx(-4j)
    assert autocorrelation([1, 1j, -1, -1j], 0) == pytest.approx(4)
    with pytest.raises(DomainError):
        autocorrelation([1, 1], 2)


def test_approximate_trivial_solution_is_not_hermitian():
    d = DiagonalValue.from_rational("3/2")
    g = approximate_trivial_solution(4, d)
    report = verify_conditions(g, d)
    assert report.passes
    assert not report.hermitian


def test_approximate_trivial_solution_requires_small_order():
    with pytest.raises(DomainError):
        approximate_trivial_solution(7, DiagonalValue.from_rational(1))
    with pytest.raises(DomainError):
        approximate_trivial_solution(2, DiagonalValue.from_rational(0))


def test_residuals_measure_gram_deviation():
    one = DiagonalValue.from_rational(1)
    g = Generator.from_values([1, 1])
    # CC* = [[2, 2], [2, 2]] frente a 2I; autovalores 2 y 0
    assert rows_residual(g, one) == pytest.approx(2.0)
    assert spectral_residual(g, one) == pytest.approx(2.0)
    assert spectral_residual(Generator.from_values([1, -1, -1, -1]), one) == pytest.approx(0.0, abs=1e-12)


def _random_hermitian(rng, n):
    phases = np.exp(2j * np.pi * rng.random(n))
    entries = np.empty(n, dtype=np.complex128)
    entries[0] = rng.uniform(0, 5)
    for j in range(1, n // 2 + 1):
        entries[j] = phases[j]
        entries[n - j] = np.conj(phases[j])
    if n % 2 == 0:
        entries[n // 2] = rng.choice([1.0, -1.0])
    return Generator.from_values(entries)


def test_hermitian_generators_have_real_spectrum():
    rng = np.random.default_rng(20240603)
    for _ in range(300):
        n = int(rng.integers(2, 65))
        g = _random_hermitian(rng, n)
        assert is_hermitian(g, 1e-12)
        assert np.max(np.abs(eigenvalues(g).imag)) <= 1e-9


def test_non_hermitian_generators_have_complex_spectrum():
    rng = np.random.default_rng(20240604)
    for _ in range(100):
        n = int(rng.integers(3, 33))
        g = Generator.from_values([1.0] + list(np.exp(2j * np.pi * rng.random(n - 1))))
        assert not is_hermitian(g, 1e-9)
        assert np.max(np.abs(eigenvalues(g).imag)) > 1e-9
    g = approximate_trivial_solution(4, DiagonalValue.from_rational("3/2"))
    assert np.max(np.abs(eigenvalues(g).imag)) > 1e-3


def test_autocorrelation_at_zero_shift_is_energy():
    rng = np.random.default_rng(20240605)
    a = rng.normal(size=9) + 1j * rng.normal(size=9)
    value = autocorrelation(a, 0)
    assert value.real == pytest.approx(float(np.sum(np.abs(a) ** 2)))
    assert value.imag == pytest.approx(0.0, abs=1e-12)


def _is_perfect(g):
    return all(abs(autocorrelation(g.entries, s)) <= 1e-9 for s in range(1, g.n))


def test_unit_diagonal_solutions_have_zero_autocorrelation(hadamard4):
    one = DiagonalValue.from_rational(1)
    generators = [hadamard4] + [s.generator for s in search_order(4) if s.d.d_squared == 1]
    generators += [form.generator for form in quaternary_forms(one)]
    for g in generators:
        assert verify_conditions(g, one).passes
        assert _is_perfect(g), g


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_unit_diagonal_check_matches_autocorrelation(n):
    one = DiagonalValue.from_rational(1)
    for tail in itertools.product((1, -1, 1j, -1j), repeat=n - 1):
        g = Generator.from_values((1,) + tail)
        assert verify_conditions(g, one).passes == _is_perfect(g), g
