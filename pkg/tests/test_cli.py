"""CLI entry points."""

import json

import pytest

from gradedcluster.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify3_mixed(capsys):
    code, out = run(capsys, "classify3", "-a", "2", "-b", "1", "-c", "1")
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "MixedFiniteDegrees"
    assert data["markov_constant"] == 4


def test_classify3_evidence_scan(capsys):
    code, out = run(capsys, "classify3", "-a", "2", "-b", "1", "-c", "1",
                    "--evidence-depth", "6")
    data = json.loads(out)
    ev = data["degree_two_variables"]
    # the mixed case has exactly one variable each in degrees 2 and -2
    assert len(ev["by_degree"]["2"]) == 1
    assert len(ev["by_degree"]["-2"]) == 1


def test_verify_x7(capsys):
    code, out = run(capsys, "verify", "--preset", "X7", "--n", "10")
    assert code == 0
    assert "ok" in out


def test_verify_period_e6aff(capsys):
    code, out = run(capsys, "verify", "--preset", "E6aff", "--n", "6")
    assert code == 0


def test_census_x7(capsys):
    code, out = run(capsys, "census", "--preset", "X7", "--mode", "degree")
    data = json.loads(out)
    assert data["class_count"] == 2
    assert data["occurring_degrees"] == ["1", "2"]


def test_mutate_path_output(capsys):
    code, out = run(capsys, "mutate", "--preset", "X7", "--path", "[2,1]")
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[0]["direction"] == 1
    assert lines[1]["direction"] == 2
    assert lines[1]["new_degree"] == [1]


def test_grid_verify(capsys):
    code, out = run(capsys, "grid", "--family", "matrix", "--k", "4", "--l", "4",
                    "--verify", "all-degrees")
    assert code == 0
    data = json.loads(out)
    assert data["all_degrees_certified"]


def test_surface_annulus(capsys):
    code, out = run(capsys, "surface", "--annulus", "6", "1", "--valuation", "g")
    data = json.loads(out)
    assert data["degrees"] == [[1], [1], [-1], [1], [-1], [1], [-1]]


def test_growth_scan(capsys):
    code, out = run(capsys, "growth", "--preset", "X7")
    data = json.loads(out)
    assert "triangles" in data and "linear" in data


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["census", "--bogus"])
    assert exc.value.code == 2


def test_mutate_symbolic_evaluation(capsys):
    code, out = run(capsys, "mutate", "--preset", "X7", "--path", "[2,1]",
                    "--symbolic", "--evaluate", "[1,1,1,1,1,1,1]")
    final = json.loads(out.strip().splitlines()[-1])
    assert final["values"][:3] == ["2", "5", "1"]
    assert "x" in final["cluster"][0]


def test_mutate_accepts_inline_seed(capsys):
    seed = json.dumps({"n": 3, "m": 0,
                       "b": [[0, 2, -1], [-2, 0, 1], [1, -1, 0]],
                       "grading": [[1, 1, 2]]})
    code, out = run(capsys, "mutate", "--seed", seed, "--path", "[3]")
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[0]["new_degree"] == [-1]
