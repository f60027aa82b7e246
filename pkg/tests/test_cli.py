import json
import subprocess
import sys

import pytest

from scenic_routes.cli import EXIT_GEOMETRY, EXIT_INPUT, EXIT_USAGE, main
from scenic_routes.fileio import serialize_points

from conftest import THREE_CIRCLES, blue, red


def run(*args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "scenic_routes", *args],
        input=stdin, capture_output=True, text=True, check=False,
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def three_circle_file(tmp_path):
    path = tmp_path / "three_circles.json"
    path.write_text(serialize_points(THREE_CIRCLES))
    return path


def test_synth_pipe_route():
    code, pts, _ = run("synth", "--shape", "line_alternating", "--count", "4", "--delta", "0.75")
    assert code == 0
    code, out, _ = run("route", "--algo", "acu", stdin=pts)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "scenic-route/1"
    assert doc["metrics"]["complete"] is True


def test_route_then_render_pipe(three_circle_file):
    code, route, _ = run("route", str(three_circle_file), "--algo", "dpe", "--seed", "3")
    assert code == 0 and json.loads(route)["seed"] == 3
    code, svg, _ = run("render", stdin=route)
    assert code == 0
    assert svg.startswith("<?xml") and 'version="1.1"' in svg


def test_render_points_with_algo(three_circle_file, capsys):
    assert main(["render", str(three_circle_file), "--algo", "acch"]) == 0
    assert 'id="route-seed"' in capsys.readouterr().out


def test_arrange(three_circle_file, capsys):
    assert main(["arrange", str(three_circle_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counts"]["nodes"] == 6 and doc["counts"]["edges"] == 12


def test_route_report(three_circle_file, capsys):
    assert main(["route", str(three_circle_file), "--algo", "acu", "--report"]) == 0
    assert "completeness" in capsys.readouterr().err


def test_seed_from_env(three_circle_file, capsys, monkeypatch):
    monkeypatch.setenv("SCENIC_SEED", "99")
    assert main(["route", str(three_circle_file), "--algo", "acu"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 99
    monkeypatch.setenv("SCENIC_SEED", "xyz")
    assert main(["route", str(three_circle_file), "--algo", "acu"]) == EXIT_USAGE


def test_only_red_points(tmp_path, capsys):
    path = tmp_path / "red.json"
    path.write_text(json.dumps({"schema": "scenic-points/1", "points": [
        {"id": 0, "class": "red", "x": 0, "y": 0, "weight": 1},
        {"id": 1, "class": "red", "x": 1, "y": 0, "weight": 2},
    ]}))
    assert main(["route", str(path), "--algo", "acu"]) == EXIT_INPUT
    assert "both classes required" in capsys.readouterr().err


def test_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert main(["route", str(path), "--algo", "acu"]) == EXIT_INPUT


def test_missing_file(tmp_path):
    assert main(["arrange", str(tmp_path / "nope.json")]) == EXIT_INPUT


def test_degenerate_geometry(tmp_path, capsys):
    path = tmp_path / "coincident.json"
    path.write_text(serialize_points([red(0, 1, 1, 1), blue(1, 1, 1, 2)]))
    assert main(["route", str(path), "--algo", "acu"]) == EXIT_GEOMETRY
    assert "degenerate" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["route", "--frobnicate"], ["route", "x.json"], ["route", "--algo", "fastest"],
     ["experiment", "--trials", "many"], ["synth", "--shape", "spiral"]],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_unknown_flag_subprocess():
    code, _, err = run("experiment", "--bogus")
    assert code == EXIT_USAGE
    assert "unrecognized" in err


def test_experiment_output(tmp_path, capsys):
    trials = tmp_path / "trials.csv"
    argv = ["experiment", "--trials", "3", "--n-red", "4", "--n-blue", "4", "--coord-range", "-30", "30",
            "--weight-range", "1", "50", "--seed", "7", "--trials-csv", str(trials)]
    assert main(argv) == 0
    out = capsys.readouterr().out
    for col in ("RL", "NoE", "NoRE", "RE%"):
        assert col in out
    assert trials.read_text().startswith("trial,algorithm")


def test_experiment_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        assert main(["experiment", "--trials", "4", "--seed", "123", "-o", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bad_option_values():
    assert main(["experiment", "--trials", "0"]) == EXIT_USAGE
    assert main(["synth", "--shape", "line_alternating", "--count", "0"]) == EXIT_USAGE


def test_synth_to_file(tmp_path):
    out = tmp_path / "grid.json"
    assert main(["synth", "--shape", "grid_alternating", "--count", "2", "-o", str(out)]) == 0
    assert len(json.loads(out.read_text())["points"]) == 4
