import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from hopfq.cli import main
from hopfq.serialize import CSV_HEADER

FIXTURES = Path(__file__).parent / "fixtures"
KINDS = [
    ["bell"],
    ["mes", "--count", "3"],
    ["omega-mes", "--omega", "0.4", "--count", "3"],
    ["separable", "--count", "3"],
    ["random", "--count", "3"],
]


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k[0])
def test_generate_analyze_round_trip(capsys, monkeypatch, kind):
    code, out, _ = run(capsys, monkeypatch, ["generate", *kind, "--seed", "5"])
    assert code == 0
    code, reports, err = run(capsys, monkeypatch, ["analyze", "--check-oracle"], out)
    assert code == 0, err
    lines = reports.splitlines()
    assert len(lines) == len(out.splitlines())
    for line, doc in zip(lines, out.splitlines()):
        rep = json.loads(line)
        assert rep["oracle_check"]["passed"]
        assert rep["input"]["amplitudes"] == json.loads(doc)["amplitudes"]


def test_bell_reports(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["generate", "bell"])
    _, reports, _ = run(capsys, monkeypatch, ["analyze"], out)
    for line in reports.splitlines():
        rep = json.loads(line)
        assert abs(rep["concurrence"] - 1) < 1e-12
        assert rep["separable"] is False
        assert "second_qubit_bloch" not in rep


def test_separable_report_has_second_qubit(capsys, monkeypatch):
    doc = '{"version":"1","amplitudes":[[0.5,0],[0.5,0],[0.5,0],[0.5,0]]}'
    code, out, _ = run(capsys, monkeypatch, ["analyze", "-"], doc)
    rep = json.loads(out)
    assert code == 0 and rep["separable"]
    assert rep["second_qubit_bloch"] == pytest.approx([1, 0, 0], abs=1e-15)


def test_single_qubit_report(capsys, monkeypatch):
    doc = '{"amplitudes":[[0.7071067811865476,0],[0,0.7071067811865476]]}'
    code, out, _ = run(capsys, monkeypatch, ["analyze"], doc)
    rep = json.loads(out)
    assert code == 0 and rep["qubits"] == 1
    assert rep["bloch"] == pytest.approx([0, 1, 0], abs=1e-15)


@pytest.mark.parametrize("chart", ["standard", "reversed", "swapped"])
def test_charts_pass_oracle(capsys, monkeypatch, chart):
    code, _, err = run(capsys, monkeypatch,
                       ["analyze", "--check-oracle", "--chart", chart, str(FIXTURES / "state.jsonl")])
    assert code == 0, err


def test_corrupted_report_exit_3(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["analyze", "--check-oracle", str(FIXTURES / "corrupted_report.json")])
    assert code == 3
    assert "oracle mismatch" in err
    assert json.loads(out)["oracle_check"]["passed"] is False


@pytest.mark.parametrize("doc", [
    "not json",
    '{"amplitudes":[[1,0],[0,0],[0,0]]}',
    '{"amplitudes":[[1,0,0],[0,0]]}',
    '{"amplitudes":[[0,0],[0,0]]}',
    '{"version":"9","amplitudes":[[1,0],[0,0]]}',
    '[1, 2]',
])
def test_malformed_input_exit_1(capsys, monkeypatch, doc):
    code, _, _ = run(capsys, monkeypatch, ["analyze"], doc)
    assert code == 1


def test_unnormalized_exit_2(capsys, monkeypatch):
    doc = '{"amplitudes":[[1,0],[1,0]]}'
    code, _, _ = run(capsys, monkeypatch, ["analyze"], doc)
    assert code == 2
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--normalize"], doc)
    assert code == 0
    assert json.loads(out)["bloch"] == pytest.approx([1, 0, 0])


def test_missing_file_exit_1(capsys, monkeypatch, tmp_path):
    code, _, _ = run(capsys, monkeypatch, ["analyze", str(tmp_path / "missing.json")])
    assert code == 1


def test_bad_arguments_exit_1(capsys, monkeypatch):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "nonsense"])
    assert exc.value.code == 1


@pytest.mark.parametrize("argv", [
    ["generate", "omega-mes", "--omega", "0"],
    ["generate", "omega-mes", "--omega", str(math.pi / 2)],
    ["generate", "omega-mes"],
    ["generate", "bell", "--index", "4"],
    ["generate", "mes", "--fiber", "1,1,0,0"],
    ["generate", "random", "--count", "0"],
])
def test_generate_errors(capsys, monkeypatch, argv):
    code, _, _ = run(capsys, monkeypatch, argv)
    assert code == 1


def test_generate_bell_index(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["generate", "bell", "--index", "3"])
    doc = json.loads(out)
    assert doc["label"] == "bell-psi-"


def test_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("HOPFQ_SEED", "42")
    _, a, _ = run(capsys, monkeypatch, ["generate", "random"])
    _, b, _ = run(capsys, monkeypatch, ["generate", "random", "--seed", "42"])
    _, c, _ = run(capsys, monkeypatch, ["generate", "random", "--seed", "43"])
    assert a == b != c


def test_fiber_cloud_csv(capsys, monkeypatch, tmp_path):
    path = tmp_path / "fiber.csv"
    code, _, err = run(capsys, monkeypatch, ["cloud", "fiber", "-o", str(path)])
    assert code == 0 and "256 rows" in err
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 257


def test_fiber_cloud_json_line_fibers(capsys, monkeypatch, tmp_path):
    path = tmp_path / "fibers.json"
    code, _, _ = run(capsys, monkeypatch,
                     ["cloud", "fiber", "--base", "0,0", "--base", "inf", "--samples", "16", "-o", str(path)])
    doc = json.loads(path.read_text())
    assert code == 0
    assert len(doc["points"]) == 32
    assert doc["line_fibers"] == [1]
    assert set(doc["points"][0]) == {"xyz", "meta"}
    assert set(doc["points"][0]["meta"]) == {"slice", "fiber_id", "param"}


def test_foliation_cloud(capsys, monkeypatch, tmp_path):
    path = tmp_path / "fol.json"
    code, _, _ = run(capsys, monkeypatch,
                     ["cloud", "foliation", "--concurrence", "0,0.5,1", "-o", str(path)])
    doc = json.loads(path.read_text())
    assert code == 0 and len(doc["points"]) == 300
    assert [s["slice"] for s in doc["stats"]] == [0, 1, 2]
    assert all(s["shell_max_dev"] < 1e-10 for s in doc["stats"])


@pytest.mark.parametrize("argv", [
    ["cloud", "foliation"],
    ["cloud", "foliation", "--concurrence", "0.5", "--omega", "0.3"],
    ["cloud", "foliation", "--concurrence", "1.5"],
    ["cloud", "fiber", "--base", "x,y"],
    ["cloud", "fiber", "--samples", "2"],
])
def test_cloud_errors(capsys, monkeypatch, tmp_path, argv):
    code, _, _ = run(capsys, monkeypatch, [*argv, "-o", str(tmp_path / "c.csv")])
    assert code == 1


def test_ball_cloud_bell_at_origin(capsys, monkeypatch, tmp_path):
    path = tmp_path / "ball.csv"
    _, states, _ = run(capsys, monkeypatch, ["generate", "bell"])
    code, _, _ = run(capsys, monkeypatch, ["cloud", "ball", "-o", str(path)], states)
    rows = path.read_text().splitlines()[1:]
    assert code == 0 and len(rows) == 4
    for row in rows:
        x, y, z, _, _, c = map(float, row.split(","))
        assert max(abs(x), abs(y), abs(z)) < 1e-15 and abs(c - 1) < 1e-15


def test_cloud_write_failure_exit_4(capsys, monkeypatch, tmp_path):
    code, _, _ = run(capsys, monkeypatch, ["cloud", "fiber", "-o", str(tmp_path / "no" / "dir.csv")])
    assert code == 4


def test_byte_exact_determinism(tmp_path):
    def once(tag):
        gen = subprocess.run([sys.executable, "-m", "hopfq", "generate", "random", "--count", "5", "--seed", "9"],
                             capture_output=True, check=True)
        rep = subprocess.run([sys.executable, "-m", "hopfq", "analyze"], input=gen.stdout,
                             capture_output=True, check=True)
        out = tmp_path / f"fol-{tag}.json"
        subprocess.run([sys.executable, "-m", "hopfq", "cloud", "foliation", "--omega", "0.2,0.7",
                        "--seed", "9", "--workers", "2", "-o", str(out)], check=True, capture_output=True)
        return gen.stdout + rep.stdout + out.read_bytes()

    assert once("a") == once("b")
