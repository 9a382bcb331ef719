import json
import subprocess

import pytest

ONES = {"gains": {"h12": 1, "h13": 1, "h23": 1}, "operating": {"epsilon": 1, "k": 1}}


def run(exe, *args):
    return subprocess.run([exe, *args], capture_output=True, text=True, timeout=300)


@pytest.fixture
def scenario(tmp_path):
    def write(doc, name="s.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return write


def test_gain_json(exe, scenario):
    res = run(exe, "gain", "--scenario", scenario(ONES), "--format", "json")
    assert res.returncode == 0, res.stderr
    report = json.loads(res.stdout)
    assert report["gain"] == pytest.approx(0.597, abs=1e-3)
    assert report["collaborate"] is False


def test_malformed_json_exits_2_without_output(exe, scenario):
    res = run(exe, "gain", "--scenario", scenario("{not json"))
    assert res.returncode == 2
    assert res.stdout == ""


def test_dead_link_exits_3(exe, scenario):
    doc = {"gains": {"h12": 1, "h13": 0, "h23": 1}, "operating": {"epsilon": 1, "k": 1}}
    res = run(exe, "gain", "--scenario", scenario(doc))
    assert res.returncode == 3
    assert "dead link h13" in res.stderr


def test_unknown_flag_and_missing_file(exe, tmp_path):
    assert run(exe, "gain", "--bogus").returncode == 2
    assert run(exe, "gain", "--scenario", str(tmp_path / "absent.json")).returncode == 4


def test_other_subcommands(exe, scenario):
    doc = dict(ONES, rate=0.9, candidates=[{"id": "r1", "h_sr": 8, "h_rd": 8}])
    path = scenario(doc)
    for cmd in ("energy", "resource", "bounds", "select"):
        res = run(exe, cmd, "--scenario", path, "--format", "json")
        assert res.returncode == 0, (cmd, res.stderr)
        json.loads(res.stdout)
    res = run(exe, "select", "--scenario", path, "--mode", "resource", "--format", "json")
    decision = json.loads(res.stdout)["decision"]
    assert decision["relay_id"] == "r1"
    assert decision["criterion_value"] == pytest.approx(0.98300380675972413, rel=1e-9)
    placed = {"placement": {"source": [-0.5, 0], "destination": [0.5, 0], "relay": [0, 0], "eta": 2},
              "operating": {"epsilon": 0.01, "k": 1}}
    res = run(exe, "placement", "--scenario", scenario(placed, "p.json"), "--format", "json")
    assert res.returncode == 0, res.stderr
    assert json.loads(res.stdout)["gains"]["h12"] == pytest.approx(4.0)


def test_sweep_csv_deterministic(exe, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--kind", "plane_gain", "--k", "0.1", "--x-step", "0.1", "--y-step", "0.05"]
    assert run(exe, *args, "--out", str(a)).returncode == 0
    assert run(exe, *args, "--threads", "4", "--out", str(b)).returncode == 0
    data = a.read_bytes()
    assert data == b.read_bytes()
    assert data.startswith(b"x,y,gain,beta_ncp,beta_cp,feasible\n")
    assert b"\r" not in data
    assert len(data.splitlines()) == 1 + 21 * 31


def test_sweep_empty_grid_and_unwritable(exe, tmp_path):
    out = tmp_path / "never.csv"
    res = run(exe, "sweep", "--kind", "collinear_gain", "--d-min", "0.1", "--d-max", "0.2", "--d-step", "0.5",
              "--out", str(out))
    assert res.returncode == 2
    assert not out.exists()
    res = run(exe, "sweep", "--kind", "collinear_gain", "--out", str(tmp_path / "missing" / "x.csv"))
    assert res.returncode == 4
    assert run(exe, "sweep", "--kind", "contours").returncode == 2


def test_verify_suites(exe):
    for suite in ("sandwich", "duality", "selection", "oracle"):
        res = run(exe, "verify", "--suite", suite)
        assert res.returncode == 0, res.stdout
        assert "FAIL" not in res.stdout
    res = run(exe, "verify", "--suite", "inequality")
    assert res.returncode == 0
    assert res.stdout.startswith("INFO")
    assert run(exe, "verify", "--suite", "nonsense").returncode == 2
