import json

import pytest

from kempe_reducibility import cli, library

from conftest import PATTERN_DIR, RANK_CENSUS

GOLDEN = PATTERN_DIR.parent / "tests" / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_all_text_golden(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "all")
    assert code == cli.EXIT_OK
    assert out == (GOLDEN / "check_all.txt").read_text()
    assert sum("reducible" in line and "NOT" not in line for line in out.splitlines()) == 6


def test_check_all_csv_golden(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "all", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "check_all.csv").read_text()


def test_check_file_csv(capsys):
    code, out, _ = run(capsys, "check", str(PATTERN_DIR / "p232.pat"), "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["pattern,total,rank0,rank1", "P232,4,3,1"]


def test_check_json_schema(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "P232", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data[0]["pattern"] == "P232"
    assert data[0]["reducible"] is True
    assert data[0]["k0"] == 1
    assert data[0]["total_classes"] == 4
    assert data[0]["histogram"] == [3, 1]
    assert {"rep": [1, 2, 1], "orbit_size": 6, "rank": 1, "witness_pair": [1, 2]} in data[0]["classes"]


def test_oracle_check_keeps_verdict(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "P7", "--oracle-check", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "P7,70,38,13,12,5,2"


def test_stage_trace(capsys):
    _, out, _ = run(capsys, "check", "--builtin", "P323", "--stage-trace")
    assert "  stage 0: 14 newly ranked" in out
    assert "  stage 3: 2 newly ranked" in out


def test_classes_p232(capsys):
    code, out, _ = run(capsys, "classes", "--builtin", "P232")
    rows = [line for line in out.splitlines() if line.startswith("  ")]
    assert code == 0 and len(rows) == 4
    (rank1,) = [r for r in rows if "rank    1" in r]
    assert rank1.split()[0] == "(1,2,1)" and rank1.endswith("pair (1,2)")
    assert sum(int(r.split()[2]) for r in rows) == 27


def test_classes_p22(capsys):
    _, out, _ = run(capsys, "classes", "--builtin", "P22", "--format", "json")
    classes = json.loads(out)[0]["classes"]
    assert len(classes) == 2 and {c["rank"] for c in classes} == {0}


def test_classes_csv(capsys):
    _, out, _ = run(capsys, "classes", "--builtin", "P232", "--format", "csv")
    assert 'P232,121,6,1,"(1,2)"' in out.splitlines()


def test_validate_p7(capsys):
    code, out, _ = run(capsys, "validate", str(PATTERN_DIR / "p7.pat"))
    assert code == 0
    assert "ok: 9 vertices, 9 internal edges, 6 half-edges, symmetry order 2" in out
    assert "15 line-graph vertices" in out


def test_validate_two_halves_on_vertex(tmp_path, capsys):
    bad = tmp_path / "bad.pat"
    bad.write_text("pattern bad\nvertices 2\nedge 0 1\nhalf 0\nhalf 0\nhalf 1\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code != 0
    assert "at most one allowed" in out


def test_validate_empty_file(tmp_path, capsys):
    empty = tmp_path / "empty.pat"
    empty.write_text("")
    code, out, _ = run(capsys, "validate", str(empty))
    assert code != 0 and "missing 'vertices'" in out


def test_check_parse_failure_exit(tmp_path, capsys):
    bad = tmp_path / "bad.pat"
    bad.write_text("pattern x\nvertices 2\nedge 0 one\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == cli.EXIT_INPUT_ERROR
    assert "line 3, column 8" in err


def test_mixed_and_non_reducible_exit_codes(tmp_path, capsys):
    flipped = tmp_path / "flipped.pat"
    flipped.write_text("pattern flipped\nvertices 7\n"
                       "edge 0 1\nedge 1 2\nedge 2 3\nedge 0 4\nedge 1 5\nedge 3 6\n"
                       "half 0\nhalf 4\nhalf 5\nhalf 6\nhalf 3\nhalf 2\n")
    code, out, _ = run(capsys, "check", str(flipped))
    assert code == cli.EXIT_NOT_REDUCIBLE and "NOT reducible" in out
    code, _, _ = run(capsys, "check", "--builtin", "P22", str(flipped))
    assert code == cli.EXIT_MIXED


def test_unknown_builtin(capsys):
    code, _, err = run(capsys, "check", "--builtin", "P9")
    assert code == cli.EXIT_INPUT_ERROR and "available" in err


def test_requires_a_pattern(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["check"])
    assert info.value.code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "check", "--builtin", "all", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    rows = target.read_text().splitlines()[1:]
    for row, name in zip(rows, library.NAMES):
        total, hist = RANK_CENSUS[name]
        cells = row.split(",")
        assert cells[0] == name and int(cells[1]) == total
        assert [int(c) for c in cells[2:] if c] == hist
