import json
import subprocess
import sys

import pytest

from cliquecover.cli import main
from cliquecover.graph_core import read_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_power_of_cycle(tmp_path, capsys):
    path = str(tmp_path / "c9.txt")
    code, out, _ = run(capsys, "generate", "power-of-cycle", "n=9", "p=2", "--out", path)
    g = read_edge_list(path)
    assert code == 0 and g.n == 9 and g.m == 18 and json.loads(out)["m"] == 18


def test_generate_schlafli_writes_labels(tmp_path, capsys):
    path = str(tmp_path / "s.txt")
    code, _, _ = run(capsys, "generate", "named", "schlafli", "--out", path)
    g = read_edge_list(path)
    assert code == 0 and g.n == 27 and (tmp_path / "s.txt.labels").exists() and g.labels is not None


def test_generate_bad_triangle_chain(capsys):
    params = json.dumps({"kind": "path", "m": 2, "odd": [[0, 1, 0]] * 3, "hat": [2, 1], "tilde": [0, 0]})
    code, _, err = run(capsys, "generate", "triangle-chain", "--params", params)
    assert code == 2 and "(P1)" in err


@pytest.mark.parametrize("argv,size", [
    (("named", "icosa-g0", "--method", "named"), 12),
    (("power-of-cycle", "n=8", "p=3", "--method", "lemcirc"), 7),
    (("named", "twister", "--method", "twister"), 10),
])
def test_cover_examples(capsys, argv, size):
    code, out, err = run(capsys, "cover", *argv)
    rep = json.loads(out)
    assert code == 0 and rep["size"] == size and rep["verdict"] == "OK" and "verdict=OK" in err


def test_cover_simplicial_on_non_simplicial(tmp_path, capsys):
    path = str(tmp_path / "c.txt")
    run(capsys, "generate", "power-of-cycle", "n=9", "p=2", "--out", path)
    code, _, err = run(capsys, "cover", path, "--method", "simplicial")
    assert code == 2 and "Z(G) empty" in err


@pytest.mark.parametrize("method", ["O", "P", "S", "M", "anti-log"])
def test_cover_schlafli_methods(capsys, method):
    code, out, _ = run(capsys, "cover", "named", "schlafli", "--method", method)
    assert code == 0 and json.loads(out)


def test_cover_needs_method(capsys):
    code, _, err = run(capsys, "cover", "named", "schlafli")
    assert code == 2 and "--method" in err


def test_exact_and_bounds(capsys):
    code, out, _ = run(capsys, "exact", "power-of-cycle", "n=5", "p=1")
    assert code == 0 and json.loads(out)["cc"] == 5
    code, out, _ = run(capsys, "bounds", "named", "twister")
    assert code == 0 and json.loads(out)["lower_bound"] == 10


def test_exact_cap(capsys):
    code, _, err = run(capsys, "exact", "power-of-cycle", "n=30", "p=4")
    assert code == 2 and "capped" in err


def test_hunt_reports(capsys):
    code, out, _ = run(capsys, "hunt", "triad-free", "n=8", "trials=0")
    rep = json.loads(out)
    assert code == 0 and rep["records"] == [] and rep["violations"] == []
    code, out, _ = run(capsys, "hunt", "triad-free", "n_max=8", "--trials", "15", "--seed", "3")
    rep = json.loads(out)
    assert code == 0 and not rep["violations"] and len(rep["records"]) == 15
    assert set(rep["tight"]) == set(rep["tight_power_of_cycle"])


def test_hunt_unknown_family(capsys):
    code, _, _ = run(capsys, "hunt", "planar")
    assert code == 2


def test_runs_are_byte_identical():
    argv = [sys.executable, "-m", "cliquecover", "hunt", "claw-free-random", "n_max=9", "--trials", "6", "--seed", "5"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
    argv = [sys.executable, "-m", "cliquecover", "cover", "random-three-cliqued", "size=12", "--seed", "4",
            "--method", "tc1"]
    assert subprocess.run(argv, capture_output=True).stdout == subprocess.run(argv, capture_output=True).stdout
