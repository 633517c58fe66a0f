import json
import subprocess
import sys

import pytest

from conewalks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_models_list(capsys):
    code, out, _ = run(capsys, "models", "list", "--format", "text")
    assert code == 0
    assert len(out.split()) == 13
    code, out, _ = run(capsys, "models", "list")
    data = json.loads(out)
    assert {d["name"] for d in data} >= {"kreweras", "scarecrow", "gessel-asymmetric"}


def test_enumerate_single_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "kreweras", "--region", "three-quadrant",
                       "--n", "3", "--end", "0,0")
    assert code == 0
    assert out.strip() == "4"


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "simple", "--n", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,i,j,count"
    assert len(out.splitlines()) == 1 + 1 + 4


def test_series_named(capsys):
    code, out, _ = run(capsys, "series", "--named", "V", "--order", "7")
    data = json.loads(out)
    coeffs = {c["n"]: c["terms"][0]["q"] for c in data["coeffs"] if c["terms"]}
    # rationals are always written as p/q
    assert coeffs == {1: "2/1", 4: "8/1", 7: "96/1"}


def test_check_theorem(capsys):
    code, out, _ = run(capsys, "check", "theorem", "--id", "K-U", "--order", "8")
    assert code == 0
    assert all(c["status"] == "pass" for c in json.loads(out))


def test_check_funceq(capsys):
    code, out, _ = run(capsys, "check", "funceq", "--model", "m6", "--order", "10")
    assert code == 0


def test_check_invariants_exit_codes(capsys):
    # the reverse-kreweras three-quadrant certificate has poles of order 3
    code, _, _ = run(capsys, "check", "invariants", "--model", "reverse-kreweras", "--order", "10")
    assert code == 1
    code, _, _ = run(capsys, "check", "invariants", "--model", "reverse-kreweras", "--order", "10",
                     "--pole-bound", "3", "3")
    assert code == 0


def test_harmonic_grid(capsys):
    code, out, _ = run(capsys, "harmonic", "--model", "kreweras", "--imax", "3", "--prec", "40")
    assert code == 0
    data = json.loads(out)
    values = {(i, j): v for i, j, v in data["values"]}
    assert values[(-1, 0)].startswith("9.0")


def test_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "--model", "kreweras", "--target", "total", "--n", "90")
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"estimate", "predicted_constant", "rel_err"}


@pytest.mark.parametrize("argv", [
    ["enumerate", "--model", "nosuch"],
    ["enumerate", "--model", "kreweras", "--end", "0"],
    ["check", "theorem", "--id", "nosuch"],
    ["check", "decoupling", "--model", "simple"],
    ["harmonic", "--model", "m7"],
    ["suite", "--criteria", "99"],
    ["series", "--named", "nosuch"],
    ["check", "funceq"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_unknown_model_names_choices(capsys):
    _, _, err = run(capsys, "enumerate", "--model", "nosuch")
    assert "kreweras" in err


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "enumerate", "--model", "kreweras", "--n", "4", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["nmax"] == 4


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "enumerate", "--model", "double-kreweras", "--n", "6")
    _, second, _ = run(capsys, "enumerate", "--model", "double-kreweras", "--n", "6")
    assert first == second


def test_suite_subset(capsys):
    code, out, _ = run(capsys, "suite", "--criteria", "2")
    assert code == 0
    assert out.startswith("criterion  2 PASS")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "conewalks", "enumerate", "--model", "simple",
                           "--n", "2", "--end", "0,0"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "4"
