"""Command-line interface tests: output formats and the exit-code contract."""

import io
import json

import pytest

from seidelkit.cli import run


def _out(capsys):
    captured = capsys.readouterr()
    return captured.out.strip(), captured.err.strip()


# -- scalar commands ---------------------------------------------------------

def test_spectrum_text(capsys):
    assert run(["spectrum", "C~"]) == 0
    out, _ = _out(capsys)
    assert out == "{1^3, -3^1}"


def test_spectrum_json(capsys):
    assert run(["spectrum", "C~", "--json"]) == 0
    out, _ = _out(capsys)
    doc = json.loads(out)
    assert doc["groups"] == [[pytest.approx(1.0), 3], [pytest.approx(-3.0), 1]]
    assert len(doc["values"]) == 4


def test_energy(capsys):
    assert run(["energy", "C~"]) == 0
    out, _ = _out(capsys)
    assert out == "6"


def test_inertia(capsys):
    assert run(["inertia", "Bw"]) == 0
    out, _ = _out(capsys)
    assert out == "(2, 0, 1)"


def test_charpoly(capsys):
    # P_3 is "Bo": edges (0,1) and (1,2)
    assert run(["charpoly", "Bo"]) == 0
    out, _ = _out(capsys)
    assert out == "x^3 - 3x - 2"


def test_complement_roundtrip(capsys):
    assert run(["complement", "C~"]) == 0
    out, _ = _out(capsys)
    assert out == "C?"  # empty graph on 4 vertices
    assert run(["complement", "C?"]) == 0
    out, _ = _out(capsys)
    assert out == "C~"


# -- construct / closed-form ---------------------------------------------------

def test_construct_dmstar_k2_is_k4(capsys):
    assert run(["construct", "--dmstar", "--m", "2", "A_"]) == 0
    out, _ = _out(capsys)
    assert out == "C~"


def test_construct_pipes_into_spectrum_matching_closed_form(capsys):
    assert run(["construct", "--dm", "--m", "2", "A_"]) == 0
    constructed, _ = _out(capsys)
    assert run(["spectrum", constructed]) == 0
    numeric, _ = _out(capsys)
    assert run(["closed-form", "--lemma", "1", "--m", "2", "A_"]) == 0
    closed, _ = _out(capsys)
    assert numeric == closed


def test_closed_form_theorem_two(capsys):
    assert run(["closed-form", "--theorem", "2", "--m", "2", "A_"]) == 0
    out, _ = _out(capsys)
    lines = out.split("\n")
    assert len(lines) == 2
    assert lines[0] == "spectrum_a: {5^1, 1^4, -3^3}"
    assert lines[1] == "spectrum_b: {3^3, -1^4, -5^1}"


def test_construct_respects_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("SEIDELKIT_MAX_DIM", "3")
    assert run(["construct", "--dm", "--m", "2", "A_"]) == 2
    _, err = _out(capsys)
    assert "cap" in err


# -- compare / certify -----------------------------------------------------------

def test_compare_k3_p3(capsys):
    assert run(["compare", "Bw", "Bo"]) == 0
    out, _ = _out(capsys)
    assert "equienergetic=True" in out and "cospectral=False" in out


def test_compare_json(capsys):
    assert run(["compare", "--json", "A_", "Bw"]) == 0
    out, _ = _out(capsys)
    doc = json.loads(out)
    assert doc["equienergetic"] is False
    assert doc["energy_delta"] == pytest.approx(2.0, abs=1e-9)


def test_certify_emits_json_certificate(capsys):
    code = run(["certify", "--theorem", "1", "--m", "2", "A_"])
    assert code == 0
    out, _ = _out(capsys)
    doc = json.loads(out)
    assert doc["equienergetic"] is True
    assert doc["cospectral"] is False
    assert doc["hypothesis"]["satisfied"] is True
    assert doc["theorem_violation"] is False
    assert doc["energy_a"] == pytest.approx(6.0, abs=1e-8)


def test_certify_text_rendering(capsys):
    assert run(["certify", "--theorem", "2", "--m", "2", "--text", "A_"]) == 0
    out, _ = _out(capsys)
    assert out.startswith("certificate (pair 2, m=2)")
    assert "equienergetic=True" in out


# -- scan -------------------------------------------------------------------------

def test_scan_from_file(tmp_path, capsys):
    catalog = tmp_path / "graphs.g6"
    catalog.write_text("A_\nBw\n@\n")
    assert run(["scan", str(catalog), "--m", "2"]) == 0
    out, _ = _out(capsys)
    doc = json.loads(out)
    assert doc["totals"]["scanned"] == 3
    assert doc["totals"]["certified"] == 1
    assert doc["totals"]["refuted"] == 1
    assert doc["totals"]["hypothesis_failed"] == 1


def test_scan_stdin_and_output_file(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("A_\n"))
    out_path = tmp_path / "report.csv"
    assert run(["scan", "--m", "3", "--format", "csv",
                "--out", str(out_path)]) == 0
    out, _ = _out(capsys)
    assert out == ""  # written to the file instead
    assert out_path.read_text().startswith("line,kind,graph6")


def test_stdin_single_graph(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    assert run(["energy", "-"]) == 0
    out, _ = _out(capsys)
    assert out == "6"


def test_file_input_single_graph(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_text("C~\n")
    assert run(["energy", "--file", str(path)]) == 0
    out, _ = _out(capsys)
    assert out == "6"


# -- exit codes ----------------------------------------------------------------------

def test_usage_errors_exit_one(capsys):
    assert run(["no-such-command"]) == 1
    assert run(["certify", "--m", "2", "A_"]) == 1  # missing --theorem
    assert run(["construct", "--m", "2", "A_"]) == 1  # missing variant
    assert run(["energy"]) == 1  # no input source
    assert run(["energy", "A_", "--file", "x"]) == 1  # two input sources
    _, err = _out(capsys)
    assert err


def test_computation_errors_exit_two(capsys):
    assert run(["energy", "!!!not-a-graph"]) == 2
    _, err = _out(capsys)
    assert "seidelkit" in err
    assert run(["spectrum", "--file", "/nonexistent/path.g6"]) == 2
    assert run(["construct", "--dm", "--m", "1", "A_"]) == 2  # m < 2


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert run(["spectrum", "--help"]) == 0
