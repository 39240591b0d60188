import json
import subprocess
import sys

import pytest

from pindot.cli import main
from pindot.ffield import make_field
from pindot.formats import (
    FormatError,
    format_point_set,
    format_scalar_set,
    parse_point_set,
    parse_scalar_set,
)
from pindot.plane import PointSet
from pindot.sumsets import ScalarSet

SQUARE = """# the running example
3,1
0 0
1 0   # trailing comment
0 1

1 1
"""


def test_parse_point_set():
    E = parse_point_set(SQUARE)
    assert E == PointSet(make_field(3), [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert parse_point_set(format_point_set(E)) == E


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("3,1\n0 0\n1 1\n0 0\n", "line 4: duplicate point 0 0 (first on line 2)"),
        ("3,1\n0 3\n", "line 2"),
        ("3,1\n0\n", "line 2: expected two codes"),
        ("4,1\n", "line 1"),
        ("# only a comment\n", "missing 'p,k'"),
    ],
)
def test_point_set_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        parse_point_set(text)


def test_scalar_set_format():
    A = parse_scalar_set("7,1\n1 2 4\n")
    assert A == ScalarSet(make_field(7), [1, 2, 4])
    assert format_scalar_set(A) == "7,1\n1 2 4\n"
    assert len(parse_scalar_set("7,1\n")) == 0
    with pytest.raises(FormatError, match="strictly increasing"):
        parse_scalar_set("7,1\n2 1\n")
    with pytest.raises(FormatError):
        parse_scalar_set("7,1\n1 9\n")
    with pytest.raises(FormatError):
        parse_scalar_set("7,1\n1\n2\n")


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text(SQUARE)
    return path


def test_cli_pinned(square_file, capsys):
    assert main(["pinned", "--in", str(square_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"x": [0, 0], "y": [1, 1], "theta": "1", "moment": 6, "dot_count": 3, "dot_values": [0, 1, 2]}


def test_cli_pinned_below_threshold(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("3,1\n0 0\n1 0\n0 1\n")
    assert main(["pinned", "--in", str(path)]) == 2
    assert "need |E| > q" in capsys.readouterr().err


def test_cli_pinned_duplicate_line(tmp_path, capsys):
    path = tmp_path / "dup.txt"
    path.write_text("3,1\n0 0\n0 0\n")
    assert main(["pinned", "--in", str(path)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_cli_identity(square_file, tmp_path):
    out = tmp_path / "id.json"
    assert main(["identity", "--in", str(square_file), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert (data["lhs"], data["rhs"], data["equal"], data["first_moment"]) == (28, 28, True, 16)
    assert [d["moment"] for d in data["profile"]] == [8, 6, 6, 8]


def test_cli_extremal(capsys):
    assert main(["extremal", "--p", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["size"], data["min_dot_count"], data["max_dot_count"], data["sharp"]) == (9, 3, 3, True)


def test_cli_glibichuk(capsys):
    assert main(["glibichuk", "--field", "3,2", "--size", "4", "--seed", "1", "--trials", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert all(r["holds"] for r in data["results"]) and len(data["results"]) == 3


def test_cli_glibichuk_too_small(capsys):
    assert main(["glibichuk", "--field", "5,1", "--size", "2"]) == 2


def test_cli_stats(tmp_path, capsys):
    assert main(["stats", "--field", "7,1", "--subgroup", "3"]) == 0
    row = json.loads(capsys.readouterr().out)["results"][0]
    assert (row["A"], row["card_AA_AA"], row["subgroup"]) == ([1, 2, 4], 6, True)
    path = tmp_path / "a.txt"
    path.write_text("7,1\n0\n")
    assert main(["stats", "--in", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["results"][0]["card_AA_AA"] == 1
    assert main(["stats", "--field", "11,1", "--size", "4", "--trials", "3"]) == 0
    assert len(json.loads(capsys.readouterr().out)["results"]) == 3


def test_cli_verify_json_and_csv(tmp_path, capsys):
    args = ["verify", "--field", "3,1", "--field", "2,2", "--trials", "3", "--checks", "identity,theorem"]
    assert main(args) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["fields"] == ["3,1", "2,2"]
    assert len(data["trials"]) == 6
    out = tmp_path / "r.csv"
    assert main(args + ["--format", "csv", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 1 + 6 * 2


def test_cli_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"fields": ["5,1"], "trials": 2, "checks": ["imp"], "seed": 5}))
    assert main(["verify", "--in", str(cfg), "--trials", "4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["trials"] == 4 and data["config"]["seed"] == 5


def test_cli_verify_defect_exit_code(monkeypatch, capsys):
    import pindot.harness as h

    monkeypatch.setattr(h, "second_moment_formula", lambda E: -1)
    assert main(["verify", "--field", "3,1", "--trials", "1", "--checks", "identity"]) == 1
    assert "DEFECT" in capsys.readouterr().err


def test_cli_verify_usage_errors(capsys):
    assert main(["verify", "--trials", "1"]) == 2
    assert main(["verify", "--field", "4,1"]) == 2
    assert main(["verify", "--field", "3,1", "--checks", "nope"]) == 2


def test_module_entry_point(square_file):
    proc = subprocess.run([sys.executable, "-m", "pindot", "pinned", "--in", str(square_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dot_count"] == 3
