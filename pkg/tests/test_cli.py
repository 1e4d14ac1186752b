import json
import subprocess
import sys

import pytest

from eccmat.cli import _parse_grid, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def result(out):
    payload = json.loads(out)
    assert payload["format_version"] == 1
    return payload["result"]


def test_build_edge_list(capsys):
    code, out, _ = run(capsys, "build", "star", "4")
    assert code == 0
    assert out.split("\n")[0] == "4"
    assert len(out.strip().split("\n")) == 4


def test_build_graph6_round_trip(capsys):
    code, out, _ = run(capsys, "build", "lollipop", "3", "2", "--format", "graph6")
    assert code == 0
    g6 = out.strip()
    code, again, _ = run(capsys, "build", "--graph6", g6, "--format", "graph6")
    assert again.strip() == g6


def test_eccmat_csv(capsys):
    code, out, _ = run(capsys, "eccmat", "path", "4", "--format", "csv")
    assert code == 0 and out == "0,0,2,3\n0,0,0,2\n2,0,0,0\n3,2,0,0\n"


def test_eccmat_json(capsys):
    code, out, _ = run(capsys, "eccmat", "cycle", "4")
    assert result(out) == {"n": 4, "entries": [[0, 0, 2, 0], [0, 0, 0, 2], [2, 0, 0, 0], [0, 2, 0, 0]]}


def test_edge_list_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("# triangle plus tail\n4\n0 1\n1 2\n0 2\n2 3\n")
    code, out, _ = run(capsys, "inertia", "--edge-list", str(f))
    assert code == 0 and sum(result(out).values()) == 4

    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("3\n0 1\n1 2\n"))
    code, out, _ = run(capsys, "inertia", "--edge-list", "-")
    assert result(out) == {"n_plus": 1, "n_minus": 2, "n_zero": 0}


def test_spectrum_numeric(capsys):
    code, out, _ = run(capsys, "spectrum", "star", "5")
    spec = result(out)["spectrum"]
    assert [e["mult"] for e in spec] == [3, 1, 1]
    assert spec[0]["value"]["float"] == pytest.approx(-2)


def test_spectrum_exact_family(capsys):
    code, out, _ = run(capsys, "spectrum", "--exact-family", "star", "7")
    assert code == 0
    r = result(out)
    assert r["det"] == "192"
    exact = [e["value"]["exact"] for e in r["spectrum"]]
    assert {"a": 5, "b": 1, "r": 31, "c": 1} in exact and {"a": -2, "b": 0, "r": 0, "c": 1} in exact


def test_spectrum_exact_family_needs_name(capsys):
    code, _, err = run(capsys, "spectrum", "--exact-family")
    assert code == 2 and "family name" in err


def test_inertia_path(capsys):
    code, out, _ = run(capsys, "inertia", "path", "10")
    assert result(out) == {"n_plus": 2, "n_minus": 2, "n_zero": 6}


def test_disconnected_exits_3(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("4\n0 1\n2 3\n")
    code, out, err = run(capsys, "eccmat", "--edge-list", str(f))
    assert code == 3 and out == ""
    assert "no path" in err


@pytest.mark.parametrize(
    "text,needle",
    [("3\n0 1\n1 x\n", "line 3"), ("3\n0 5\n", "range"), ("3\n1 1\n", "self-loop"), ("3\n0 1 2\n", "line 2")],
)
def test_malformed_edge_list_exits_2(tmp_path, capsys, text, needle):
    f = tmp_path / "bad.txt"
    f.write_text(text)
    code, _, err = run(capsys, "eccmat", "--edge-list", str(f))
    assert code == 2 and needle in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "eccmat")[0] == 2
    assert run(capsys, "eccmat", "path", "4", "--graph6", "C~")[0] == 2
    assert run(capsys, "eccmat", "path", "four")[0] == 2
    assert run(capsys, "eccmat", "hypercube", "3")[0] == 2
    assert run(capsys, "eccmat", "--edge-list", "/nonexistent/file")[0] == 2
    assert run(capsys, "verify", "riemann")[0] == 2
    assert run(capsys, "build", "--graph6", "!!")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_json_and_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "tree-conjecture", "--max-n", "6")
    assert code == 0
    (rep,) = result(out)
    assert rep["passed"] and rep["instances_checked"] == 3 + 16 + 125 + 1296
    assert "elapsed" not in rep
    code, out, _ = run(capsys, "verify", "inertia", "--family", "path", "--grid", "4..8", "--timing")
    (rep,) = result(out)
    assert rep["instances_checked"] == 5 and "elapsed" in rep


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "crosscheck", "--family", "star", "--grid", "5..6", "--tol", "0")
    assert code == 1
    assert not result(out)[0]["passed"]


def test_verify_table_and_out(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "sentinel", "--format", "table", "--out", str(target))
    assert code == 0 and out == ""
    assert "PASS" in target.read_text()


def test_verify_output_is_deterministic(capsys):
    first = run(capsys, "verify", "properties", "--seed", "3")[1]
    second = run(capsys, "verify", "properties", "--seed", "3")[1]
    assert first == second


def test_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("ECCMAT_JOBS", "2")
    code, out, _ = run(capsys, "verify", "tree-irreducibility", "--max-n", "5")
    assert code == 0 and result(out)[0]["instances_checked"] == 1 + 3 + 16 + 125


def test_parse_grid():
    assert _parse_grid("3..6") == [3, 4, 5, 6]
    assert _parse_grid("[[2, 4], [3, 4]]") == [(2, 4), (3, 4)]
    assert _parse_grid(None) is None
    from eccmat.cli import UsageError

    with pytest.raises(UsageError):
        _parse_grid("[oops")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eccmat", "inertia", "path", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["n_zero"] == 1
