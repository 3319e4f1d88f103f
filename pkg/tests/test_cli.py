import json

import jsonschema
import pytest

from fixtures import GO_TEXT, HIRZ_TEXT
from mgdual.io import cli
from mgdual.io.report import load_schema


@pytest.fixture
def files(tmp_path):
    go = tmp_path / "go.prob"
    go.write_text(GO_TEXT + "query:\nhilbert I 4\nmember J x2\nquotient J 4 I\nsaturate I 3 I\nmultiplicity I 4\ndual-basis I 2\n")
    hirz = tmp_path / "hirz.prob"
    hirz.write_text(HIRZ_TEXT)
    bad = tmp_path / "bad.prob"
    bad.write_text("vars: x1 x2\ngrading:\n1 2\nideal I:\nx1 + x2\n")
    return {"go": str(go), "hirz": str(hirz), "bad": str(bad)}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert_table(files, capsys):
    code, out, _ = run(capsys, "hilbert", files["go"], "--ideal", "I", "--max-degree", "4")
    assert code == 0
    assert out.splitlines() == ["k  0  1  2  3  4", "H  1  1  1  0  0"]


def test_member_witness(files, capsys):
    code, out, _ = run(capsys, "member", files["go"], "--ideal", "J", "--poly", "x2")
    assert code == 0
    assert "not a member" in out and "1 * d[(2,0)] + 1 * d[(0,1)]" in out


def test_curve_grid(files, capsys):
    code, out, _ = run(capsys, "hilbert", files["hirz"], "--ideal", "C", "--max-degree", "(4,4)")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 22
    assert lines[1].split() == ["12", "13", "-", "-", "-", "-"]
    assert lines[9].split() == ["4", "5", "12", "18", "24", "30"]
    assert lines[-1].split() == ["-8", "-", "-", "-", "-", "1"]


def test_dual_basis_output(files, capsys):
    code, out, _ = run(capsys, "dual-basis", files["hirz"], "--ideal", "F", "--degree", "(1,0)")
    assert code == 0
    assert "1 * d[(1,2,0,0)] + 1 * d[(0,0,1,0)]" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "{go}"],
        ["hilbert", "{go}", "--ideal", "I", "--max-degree", "4"],
        ["hilbert", "{hirz}", "--ideal", "C", "--max-degree", "(2,2)"],
        ["dual-basis", "{go}", "--ideal", "I", "--degree", "2"],
        ["member", "{go}", "--ideal", "J", "--poly", "x2"],
        ["quotient", "{go}", "--ideal", "J", "--by", "I", "--max-degree", "4"],
        ["quotient", "{go}", "--ideal", "J", "--by", "x1", "--max-degree", "4"],
        ["saturate", "{go}", "--ideal", "I", "--by", "I", "--window", "4"],
        ["multiplicity", "{go}", "--ideal", "I", "--bound", "4"],
    ],
)
def test_json_matches_schema(files, capsys, argv):
    argv = [a.format(**files) for a in argv]
    code, out, _ = run(capsys, "--format", "json", "--verify", *argv)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    if argv[0] != "validate":
        assert doc["meta"]["verified"] is True


def test_run_json_is_list(files, capsys):
    code, out, _ = run(capsys, "run", files["go"], "--format", "json")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 6
    for doc in docs:
        jsonschema.validate(doc, load_schema())
    assert docs[3]["meta"]["stabilized_at"] == 1


def test_csv(files, capsys):
    code, out, _ = run(capsys, "hilbert", files["hirz"], "--ideal", "F", "--max-degree", "(1,0)", "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "d1,d2,dim" and "1,0,3" in rows


def test_plot_written(files, capsys, tmp_path):
    target = tmp_path / "fig.png"
    code, _, err = run(capsys, "hilbert", files["hirz"], "--ideal", "C", "--max-degree", "(2,2)", "--plot", str(target))
    assert code == 0 and target.stat().st_size > 0 and "figure written" in err
    chain = tmp_path / "chain.png"
    code, _, _ = run(capsys, "saturate", files["go"], "--ideal", "I", "--by", "x1", "--window", "3", "--plot", str(chain), "--quiet")
    assert code == 0 and chain.exists()


def test_parse_errors_exit_1(files, capsys):
    code, _, err = run(capsys, "validate", files["bad"])
    assert code == 1 and "x1 + x2" in err
    code, _, err = run(capsys, "hilbert", files["go"], "--ideal", "Z", "--max-degree", "3")
    assert code == 1
    code, _, _ = run(capsys, "member", files["go"], "--ideal", "J", "--poly", "2 x1")
    assert code == 1
    code, _, _ = run(capsys, "hilbert", files["go"] + ".missing", "--ideal", "I", "--max-degree", "3")
    assert code == 1


def test_verify_mismatch_exit_2(files, capsys, monkeypatch):
    monkeypatch.setattr(cli, "oracle_hilbert", lambda ideal, m: -1)
    code, _, err = run(capsys, "hilbert", files["go"], "--ideal", "I", "--max-degree", "2", "--verify")
    assert code == 2 and "MISMATCH" in err
