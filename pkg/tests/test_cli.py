import io
import json
import subprocess
import sys

import pytest

from charvar.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    assert code == 0
    return json.loads(text)


def test_epoly_example():
    rep = run_json("epoly", "--genus", "0", "--mu", "1,1;1,1;1,1")
    assert rep["E"] == "1"
    assert rep["d_mu"] == 0
    assert rep["schema"] == 1
    assert rep["query"] == {"genus": 0, "mu": "1,1;1,1;1,1"}
    assert all(rep["checks"].values())
    assert rep["timings"] == {}


def test_apoly_example():
    rep = run_json("apoly", "--genus", "1", "--mu", "1")
    assert rep["A"] == "q"


def test_count_example():
    rep = run_json("count", "--mult", "--genus", "0", "--mu", "1,1;1,1;1,1", "--q", "5")
    assert rep["count"] == 120
    assert rep["per_pgl"] == "1"
    assert rep["E"] == "1"
    assert rep["checks"] == {"matches_E(q)": True, "divisible_by_pgl": True}


def test_count_additive():
    rep = run_json("count", "--add", "--genus", "1", "--mu", "1,1", "--q", "3")
    assert all(rep["checks"].values())


def test_hmu_text_and_latex():
    code, text = run("hmu", "--genus", "1", "--mu", "1")
    assert code == 0
    assert "H: z^2 - 2*z*w + w^2" in text
    assert "check symmetric: ok" in text
    code, tex = run("hmu", "--genus", "1", "--mu", "1", "--format", "latex")
    assert code == 0 and "z^{2}" in tex


def test_mhp_and_euler():
    rep = run_json("mhp", "--genus", "1", "--mu", "1")
    assert all(rep["checks"].values())
    rep = run_json("euler", "--genus", "2", "--mu", "2")
    assert rep["euler"] == "-2"


def test_output_is_byte_identical():
    args = ("epoly", "--genus", "1", "--mu", "2,1;1,1,1", "--format", "json")
    assert run(*args) == run(*args)


def test_timings_only_on_request():
    rep = run_json("apoly", "--genus", "1", "--mu", "1,1", "--timings")
    assert "total" in rep["timings"]


def test_chartab():
    rep = run_json("chartab", "--q", "3")
    assert len(rep["classes"]) == 8
    assert sorted(c["degree"] for c in rep["characters"]) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert all(rep["checks"].values())


def test_computation_errors_exit_1(capsys):
    code, _ = run("count", "--add", "--genus", "0", "--mu", "2;2", "--q", "5")
    assert code == 1
    assert "DivisibleMu" in capsys.readouterr().err
    code, _ = run("euler", "--genus", "0", "--mu", "1;1")
    assert code == 1
    assert "UnsupportedGenusZero" in capsys.readouterr().err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run("epoly", "--genus", "1", "--mu", "1,x")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run("epoly", "--genus", "-1", "--mu", "1")
    assert exc.value.code == 2
    code, _ = run("count", "--mult", "--genus", "0", "--mu", "1;1", "--q", "4")
    assert code == 2
    code, _ = run("count", "--mult", "--genus", "0", "--mu", "1;1,1", "--q", "5")
    assert code == 2


def test_verify_only():
    code, text = run("verify", "--only", "2", "12")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[-1] == "2/2 checks passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "charvar", "apoly", "--genus", "1", "--mu", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "A: q" in proc.stdout
