import cmath
import math
from fractions import Fraction

import pytest

from circortho.appendix import (
    looks_like_appendix,
    parse_appendix,
    parse_complex,
    parse_generator_tokens,
    parse_scalar,
    parse_surd,
)
from circortho.config import INGEST_TOL
from circortho.errors import CatalogParseError
from circortho.search import spectrum_classes
from circortho.spectral import verify_conditions


@pytest.mark.parametrize(
    "text, d_squared",
    [
        ("1/(2√2)", Fraction(1, 8)),
        ("5/(2√3)", Fraction(25, 12)),
        ("sqrt(13)/2", Fraction(13, 4)),
        ("\\sqrt{13}/2", Fraction(13, 4)),
        ("3√15/10", Fraction(27, 20)),
        ("1/(2 √5)", Fraction(1, 20)),
        ("11/4", Fraction(121, 16)),
        ("0.25", Fraction(1, 16)),
    ],
)
def test_parse_surd(text, d_squared):
    assert parse_surd(text).d_squared == d_squared


def test_parse_surd_rejects_garbage():
    with pytest.raises(ValueError):
        parse_surd("dos")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.833289 - 0.552838 i", complex(0.833289, -0.552838)),
        ("-0.5 +  0.866025 i", complex(-0.5, 0.866025)),
        ("i", 1j),
        ("-i", -1j),
        ("-0.5i", -0.5j),
        ("3 + i", 3 + 1j),
        ("2.5", 2.5),
        ("1e-3 - 2e-1 i", complex(1e-3, -0.2)),
        ("−1", -1),
    ],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1 + 2"])
def test_parse_complex_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_complex(text)


def test_parse_scalar_roots_of_unity(omega3):
    assert parse_scalar("w^3", 4) == pytest.approx(-1j)
    assert parse_scalar("-w", 3) == pytest.approx(-omega3)
    assert parse_scalar("ω^2", 3) == pytest.approx(omega3 ** 2)
    assert parse_scalar("-i", 4) == -1j


def test_parse_generator_tokens(omega3):
    g = parse_generator_tokens("w, 1, 1")
    assert g.n == 3
    assert g.entries[0] == pytest.approx(omega3)
    assert g.entries[1:] == (1, 1)
    assert parse_generator_tokens("w,1", 4).entries[0] == pytest.approx(cmath.exp(0.5j * math.pi))


def test_fixture_blocks(appendix_entries):
    assert [e.n for e in appendix_entries] == [7, 11, 13, 15, 19, 21]
    assert [e.line_number for e in appendix_entries] == [3, 7, 12, 18, 24, 31]
    assert appendix_entries[0].d.d_squared == Fraction(1, 8)


def test_fixture_generators_pass_verification(appendix_entries):
    for entry in appendix_entries:
        report = verify_conditions(entry.generator, entry.d, INGEST_TOL)
        assert report.passes, entry.n
        assert report.hermitian, entry.n


def test_fixture_diagonals_belong_to_a_spectrum_class(appendix_entries):
    for entry in appendix_entries:
        allowed = {c.d.d_squared for c in spectrum_classes(entry.n)}
        assert entry.d.d_squared in allowed, entry.n


def test_block_with_wrong_entry_count():
    with pytest.raises(CatalogParseError) as info:
        parse_appendix("n = 3, d = 1/2\n0.5, -1\n")
    assert info.value.line_number == 1


def test_data_before_first_header():
    with pytest.raises(CatalogParseError) as info:
        parse_appendix("# comentario\n0.5, -1\nn = 2, d = 0\n0, 1\n")
    assert info.value.line_number == 2
    assert str(info.value).startswith("línea 2: ")


def test_bad_literal_reports_its_line():
    with pytest.raises(CatalogParseError) as info:
        parse_appendix("n = 2, d = 0\n\n0, foo\n")
    assert info.value.line_number == 3


def test_bad_header_value():
    with pytest.raises(CatalogParseError) as info:
        parse_appendix("n = 2, d = abc\n0, 1\n")
    assert info.value.line_number == 1


def test_empty_text_has_no_blocks():
    with pytest.raises(CatalogParseError):
        parse_appendix("# solo comentarios\n\n")


def test_looks_like_appendix(appendix_path):
    assert looks_like_appendix(appendix_path.read_text(encoding="utf-8"))
    assert not looks_like_appendix('{"kind": "complex"}\n')
    assert not looks_like_appendix("")
