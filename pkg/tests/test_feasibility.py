from fractions import Fraction

import pytest

from circortho.core import DiagonalValue
from circortho.errors import DomainError, SearchLimitError
from circortho.feasibility import (
    PUBLISHED_EVEN_EXCEPTIONS,
    STATUS_EXCLUDED,
    STATUS_EXISTS,
    STATUS_OPEN,
    admissible_even_orders,
    classify_even_order,
    classify_pair,
    even_order_candidates,
    even_order_exceptions,
    factorize,
    integer_d_filter,
    quaternary_forms,
    quaternary_oracle,
    trivial_construction,
    trivial_diagonal,
)
from circortho.search import search_order
from circortho.spectral import verify_conditions

from tests.conftest import entry_set


def _rules(verdict):
    return [rule for rule, _ in verdict.reasons]


def test_factorize():
    assert factorize(105) == {3: 1, 5: 1, 7: 1}
    assert factorize(64) == {2: 6}
    assert factorize(1) == {}


def test_even_order_candidates_for_sixteen():
    candidates = even_order_candidates(16)
    assert [(c.k, c.d.exact_rational) for c in candidates] == [(1, 7), (2, 1)]
    assert not any(c.excluded for c in candidates)


def test_even_order_candidates_for_eighteen():
    candidates = even_order_candidates(18)
    assert candidates[0].d.exact_rational == 8
    assert candidates[1].d.d_squared == Fraction(13, 4)
    assert candidates[1].excluded


def test_even_order_candidates_for_forty():
    assert Fraction(7, 3) in {c.d.exact_rational for c in even_order_candidates(40)}


def test_even_order_candidates_reject_odd_order():
    with pytest.raises(DomainError):
        even_order_candidates(15)


def test_integer_filter_allows_order_210():
    verdict = integer_d_filter(210, 4)
    assert verdict.allowed
    assert verdict.reasons == []
    assert verdict.derived["ell"] == 15
    assert verdict.derived["k"] == 7


def test_integer_filter_zero_diagonal():
    verdict = integer_d_filter(12, 0)
    assert not verdict.allowed
    assert "C3.4" in _rules(verdict)


def test_integer_filter_reports_every_rule():
    verdict = integer_d_filter(20, 3)
    assert not verdict.allowed
    assert _rules(verdict)[0] == "P3.3i"
    assert "P3.3iv" in _rules(verdict)
    assert "P3.7" in _rules(verdict)


def test_filter_verdict_serialization():
    data = integer_d_filter(12, 0).to_dict()
    assert data["allowed"] is False
    assert {"rule": "C3.4", "text": data["reasons"][-1]["text"]} in data["reasons"]


@pytest.mark.parametrize(
    "d, n_max, expected",
    [
        (0, 500, [2]),
        (2, 500, [6]),
        (3, 500, [8]),
        (4, 300, [10, 210]),
        (5, 500, [12, 120]),
    ],
)
def test_admissible_even_orders(d, n_max, expected):
    assert admissible_even_orders(d, n_max) == expected


def test_admissible_even_orders_are_monotone():
    short = admissible_even_orders(5, 100)
    long = admissible_even_orders(5, 500)
    assert long[: len(short)] == short


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12, 14])
def test_filter_never_excludes_search_solutions(n):
    for d in search_order(n).distinct_d():
        if d.exact_rational is not None and d.exact_rational.denominator == 1:
            assert integer_d_filter(n, int(d.exact_rational)).allowed


def test_trivial_construction_examples(hadamard4):
    assert trivial_construction(6, 0).entries == (2, -1, -1, -1, -1, -1)
    assert trivial_construction(2, 0).entries == (0, -1)
    assert trivial_construction(4, 1).entries == hadamard4.entries


def test_trivial_construction_passes_for_all_small_orders():
    for n in range(2, 65):
        d = trivial_diagonal(n)
        for nu in range(n):
            report = verify_conditions(trivial_construction(n, nu), d, 1e-9)
            assert report.passes, (n, nu)
            assert report.hermitian, (n, nu)


def test_trivial_construction_rejects_bad_arguments():
    with pytest.raises(DomainError):
        trivial_construction(1, 0)
    with pytest.raises(DomainError):
        trivial_construction(5, 5)


def test_quaternary_forms_even_diagonal():
    forms = quaternary_forms(DiagonalValue.from_rational(2))
    assert entry_set(f.generator for f in forms) == entry_set(
        [trivial_construction(6, 0), trivial_construction(6, 3)]
    )
    assert [f.generator.entries for f in forms] == [(2, -1, -1, -1, -1, -1), (2, 1, -1, 1, -1, 1)]
    assert not any(f.conjectural for f in forms)


def test_quaternary_forms_half_integer_diagonal():
    forms = quaternary_forms(DiagonalValue.from_rational("3/2"))
    assert [f.generator.entries for f in forms] == [(1.5, -1, -1, -1, -1)]


def test_quaternary_forms_odd_diagonal_are_conjectural():
    forms = quaternary_forms(DiagonalValue.from_rational(1))
    entries = [f.generator.entries for f in forms]
    assert (1, 1j, 1, -1j) in entries
    assert (1, -1j, 1, 1j) in entries
    assert len(forms) == 4
    assert all(f.conjectural for f in forms)


def test_quaternary_forms_need_half_integer():
    assert quaternary_forms(DiagonalValue.from_rational("1/3")) == []
    assert quaternary_forms(DiagonalValue.from_d_squared("1/8")) == []


def test_quaternary_oracle_order_four():
    solutions = quaternary_oracle(4)
    assert {d.exact_rational for d, _ in solutions} == {1}
    forms = quaternary_forms(DiagonalValue.from_rational(1))
    assert entry_set(g for _, g in solutions) == entry_set(f.generator for f in forms)


def test_quaternary_oracle_order_seven():
    solutions = quaternary_oracle(7)
    assert [(d.exact_rational, g.entries) for d, g in solutions] == [
        (Fraction(5, 2), (2.5, -1, -1, -1, -1, -1, -1))
    ]


@pytest.mark.parametrize("n", range(2, 11))
def test_quaternary_oracle_matches_forms(n):
    solutions = quaternary_oracle(n)
    expected = quaternary_forms(DiagonalValue.from_rational(Fraction(n - 2, 2)))
    assert {d.d_squared for d, _ in solutions} == {Fraction(n - 2, 2) ** 2}
    assert entry_set(g for _, g in solutions) == entry_set(f.generator for f in expected)


def test_quaternary_oracle_limits():
    with pytest.raises(SearchLimitError):
        quaternary_oracle(13)
    with pytest.raises(DomainError):
        quaternary_oracle(1)


def test_even_order_exceptions_match_published_table(quiet_logger):
    exceptions = even_order_exceptions(22, 100, quiet_logger)
    computed = {n: d.exact_rational for n, d in exceptions}
    assert computed == {n: Fraction(d) for n, d in PUBLISHED_EVEN_EXCEPTIONS.items()}
    assert quiet_logger.get_logs(event_type="warning") == []


@pytest.mark.parametrize("n, d", sorted(PUBLISHED_EVEN_EXCEPTIONS.items()))
def test_published_exceptions_are_open(n, d):
    status = classify_pair(n, DiagonalValue.from_rational(d))
    assert status.status == STATUS_OPEN


@pytest.mark.parametrize("n, d", [(210, 4), (120, 5)])
def test_large_integer_pairs_are_open(n, d):
    assert classify_pair(n, DiagonalValue.from_rational(d)).status == STATUS_OPEN


def test_classify_pair_trivial_exists():
    status = classify_pair(10, DiagonalValue.from_rational(4))
    assert status.status == STATUS_EXISTS


def test_classify_pair_excluded_by_search():
    status = classify_pair(16, DiagonalValue.from_rational(1))
    assert status.status == STATUS_EXCLUDED
    assert [rule for rule, _ in status.reasons] == ["SEARCH"]


def test_classify_pair_catalog_witness():
    d = DiagonalValue.from_rational(1)
    status = classify_pair(36, d, witnesses={(36, d.d_squared)})
    assert status.status == STATUS_EXISTS


def test_classify_pair_irrational_even_diagonal():
    status = classify_pair(20, DiagonalValue.from_d_squared(6))
    assert status.status == STATUS_EXCLUDED
    assert "P3.2ii" in [rule for rule, _ in status.reasons]


def test_classify_even_order_twenty():
    statuses = classify_even_order(20)
    assert [s.status for s in statuses] == [STATUS_EXISTS, STATUS_EXCLUDED]
    assert statuses[0].d.exact_rational == 9
