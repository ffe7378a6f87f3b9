import pytest

from circortho import __version__
from circortho.catalog import dumps_record, read_catalog
from circortho.cli import main


def run_cli(capsys, *argv):
    code = main(["--quiet", *argv])
    captured = capsys.readouterr()
    return code, captured.out


def test_version(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_missing_subcommand(capsys):
    assert main([]) == 2


def test_search_order_three(capsys):
    code, out = run_cli(capsys, "search", "--n", "3")
    assert code == 0
    assert "3 | 1/2" in out.splitlines()


def test_search_order_seven(capsys):
    code, out = run_cli(capsys, "search", "--n", "7")
    assert code == 0
    assert "7 | 5/2, 1/(2√2)" in out.splitlines()


def test_search_csv_format(capsys):
    code, out = run_cli(capsys, "search", "--n", "7", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,d,d_squared,d_approx"
    assert [line.split(",")[:3] for line in lines[1:]] == [["7", "5/2", "25/4"], ["7", "1/(2√2)", "1/8"]]


@pytest.mark.slow
def test_search_order_seventeen(capsys):
    code, out = run_cli(capsys, "search", "--n", "17")
    assert code == 0
    assert "17 | 15/2" in out.splitlines()


@pytest.mark.parametrize("order", ["1", "27", "x"])
def test_search_rejects_bad_order(capsys, order):
    code, _ = run_cli(capsys, "search", "--n", order)
    assert code == 2


def test_search_rejects_bad_workers(capsys):
    code, _ = run_cli(capsys, "search", "--n", "3", "--workers", "0")
    assert code == 2


def test_search_writes_catalog(capsys, tmp_path):
    path = tmp_path / "catalog.jsonl"
    code, _ = run_cli(capsys, "search", "--n", "7", "--out", str(path))
    assert code == 0
    records = read_catalog(path)
    assert {r.d_squared for r in records} == {"25/4", "1/8"}
    assert all(r.provenance.startswith("circortho --quiet search --n 7") for r in records)


def test_search_output_is_reproducible(capsys, tmp_path):
    path = tmp_path / "catalog.jsonl"
    run_cli(capsys, "search", "--n", "9", "--out", str(path))
    first = path.read_bytes()
    run_cli(capsys, "search", "--n", "9", "--out", str(path))
    assert path.read_bytes() == first


def test_search_unwritable_output(capsys, tmp_path):
    blocker = tmp_path / "fichero"
    blocker.write_text("", encoding="utf-8")
    code, _ = run_cli(capsys, "search", "--n", "3", "--out", str(blocker / "catalog.jsonl"))
    assert code == 3


def test_search_database_mirror(capsys, tmp_path):
    db = tmp_path / "mirror.db"
    code, _ = run_cli(capsys, "search", "--n", "5", "--db", str(db))
    assert code == 0
    assert db.exists()


def test_verify_appendix_fixture(capsys, appendix_path):
    code, out = run_cli(capsys, "verify", str(appendix_path))
    assert code == 0
    assert "appendix" in out


def test_verify_csv_format(capsys, appendix_path):
    code, out = run_cli(capsys, "verify", str(appendix_path), "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "line,kind,n,d,residual,passes,detail"
    assert len(lines) == 7


def test_verify_round_trip_and_corruption(capsys, tmp_path):
    path = tmp_path / "catalog.jsonl"
    run_cli(capsys, "search", "--n", "5", "--out", str(path))
    code, _ = run_cli(capsys, "verify", str(path))
    assert code == 0

    records = read_catalog(path)
    data = records[0].model_dump()
    data["generator"][1] = [data["generator"][1][0] + 0.5, data["generator"][1][1]]
    corrupted = records[0].model_validate(data)
    path.write_text(dumps_record(corrupted) + "\n", encoding="utf-8")
    code, _ = run_cli(capsys, "verify", str(path))
    assert code == 1


def test_verify_reports_file_line_numbers(capsys, tmp_path):
    path = tmp_path / "catalog.jsonl"
    run_cli(capsys, "search", "--n", "7", "--out", str(path))
    records = path.read_text(encoding="utf-8").splitlines()
    path.write_text("\n\n" + "\n\n".join(records) + "\n", encoding="utf-8")
    code, out = run_cli(capsys, "verify", str(path), "--format", "csv")
    assert code == 0
    lines = [row.split(",")[0] for row in out.splitlines()[1:]]
    assert lines == [str(3 + 2 * i) for i in range(len(records))]


def test_verify_parse_errors(capsys, tmp_path):
    broken = tmp_path / "roto.jsonl"
    broken.write_text("{roto\n", encoding="utf-8")
    assert run_cli(capsys, "verify", str(broken))[0] == 4
    unknown = tmp_path / "texto.txt"
    unknown.write_text("hola\n", encoding="utf-8")
    assert run_cli(capsys, "verify", str(unknown))[0] == 4


def test_verify_missing_file(capsys, tmp_path):
    assert run_cli(capsys, "verify", str(tmp_path / "no-existe.jsonl"))[0] == 3


def test_classify_integer_diagonal(capsys):
    code, out = run_cli(capsys, "classify", "--d", "4", "--n-max", "300")
    assert code == 0
    assert out.strip() == "10: exists; 210: open"


def test_classify_single_even_order(capsys):
    code, out = run_cli(capsys, "classify", "--n", "20")
    assert code == 0
    assert "20 | d = 9: exists" in out
    assert "20 | d = √6: excluded (P3.2ii)" in out
    assert "20: d = 9 only" in out


def test_classify_even_range(capsys):
    code, out = run_cli(capsys, "classify", "--n", "22..100")
    rows = [line for line in out.splitlines() if line.endswith("| open")]
    assert code == 0
    assert len(rows) == 9
    assert "40 | 7/3 | open" in rows
    assert "96 | 7 | open" in rows


@pytest.mark.parametrize("argv", [["classify"], ["classify", "--n", "20", "--d", "4"]])
def test_classify_requires_exactly_one_target(capsys, argv):
    assert main(argv) == 2


def test_construct_trivial(capsys):
    code, out = run_cli(capsys, "construct", "--trivial", "--n", "10", "--nu", "0")
    assert code == 0
    assert out.startswith("circ_10(4, -1, -1, -1, -1, -1, -1, -1, -1, -1)  d = 4 ≈ 4.000000")


def test_construct_quaternary(capsys):
    code, out = run_cli(capsys, "construct", "--quaternary", "--d", "1")
    assert code == 0
    assert len(out.splitlines()) == 4
    assert "circ_4(1, 1i, 1, -1i)" in out
    assert "[complex-plus-i conjectural]" in out


def test_construct_approximate(capsys, tmp_path):
    path = tmp_path / "approx.jsonl"
    code, _ = run_cli(capsys, "construct", "--approximate", "--n", "5", "--d", "3", "--out", str(path))
    assert code == 0
    assert read_catalog(path)[0].n == 5


def test_construct_approximate_out_of_range(capsys):
    code, _ = run_cli(capsys, "construct", "--approximate", "--n", "10", "--d", "1")
    assert code == 2


def test_zm_one_plus_family(capsys):
    code, out = run_cli(capsys, "zm", "--family", "one-plus", "--m", "4", "--n", "8")
    assert code == 0
    assert out.strip() == "d ∈ {1, 3}"


def test_zm_order_family(capsys):
    code, out = run_cli(capsys, "zm", "--orders", "--m", "7", "--ell-max", "2")
    assert code == 0
    assert out.splitlines() == [
        "Z_7: n = 7·ℓ + 4",
        "4: d ∈ {6}",
        "18: d ∈ {6}",
        "ℓ descartados (n impar): 1",
    ]


def test_zm_search_writes_records(capsys, tmp_path):
    path = tmp_path / "zm.jsonl"
    code, out = run_cli(capsys, "zm", "--search", "--m", "3", "--n", "4", "--out", str(path))
    assert code == 0
    assert "circ_4(2, 1, 1, 1) mod 3" in out.splitlines()
    assert all(r.kind == "zm" for r in read_catalog(path))


def test_zm_one_plus_needs_even_order(capsys):
    code, _ = run_cli(capsys, "zm", "--family", "one-plus", "--m", "4", "--n", "7")
    assert code == 2


def test_mub_from_generator(capsys, tmp_path):
    path = tmp_path / "mub.jsonl"
    code, out = run_cli(capsys, "mub", "--n", "3", "--generator", "w,1,1", "--out", str(path))
    assert code == 0
    assert "fourier / circulant" in out
    assert read_catalog(path)[0].kind == "mub"


def test_mub_xz(capsys):
    code, out = run_cli(capsys, "mub", "--n", "5", "--xz")
    assert code == 0
    assert out.startswith("XZ: residuo de autovector")


def test_mub_failures(capsys):
    # circ_2(√2, 0) normalizada es la identidad
    assert run_cli(capsys, "mub", "--n", "2", "--generator", "√2,0")[0] == 1
    assert run_cli(capsys, "mub", "--n", "2", "--generator", "2,0")[0] == 1
    assert run_cli(capsys, "mub", "--n", "4", "--xz")[0] == 2
    assert run_cli(capsys, "mub", "--n", "3", "--generator", "1,1")[0] == 2
