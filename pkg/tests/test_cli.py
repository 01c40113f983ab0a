from __future__ import annotations

import json
import subprocess
import sys
import warnings

import pytest

from dampedplate import config as cfgmod
from dampedplate.cli import EXIT_CONFIG, EXIT_NUMERIC, EXIT_OK, main

SMALL = """\
grid.n = 1
grid.N = 64
grid.L = 20
time.dt = 0.01
time.T = 0.2
data.u0_amplitude = 0.2
"""


def _cfg(tmp_path, text=SMALL, name="run.cfg"):
    p = tmp_path / name
    p.write_text(text)
    return p


def _run(*argv) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return main([str(a) for a in argv])


def test_unknown_key(tmp_path, capsys):
    cfg = _cfg(tmp_path, SMALL + "grid.bogus = 3\n")
    assert _run("simulate", "--config", cfg, "--out", tmp_path / "o") == EXIT_CONFIG
    assert "unknown key 'grid.bogus'" in capsys.readouterr().err


def test_bad_value_and_constraint(tmp_path):
    assert _run("simulate", "--config", _cfg(tmp_path, SMALL.replace("grid.L = 20", "grid.L = wide")),
                "--out", tmp_path / "o") == EXIT_CONFIG
    assert _run("simulate", "--config", _cfg(tmp_path, SMALL + "model.lam = 1.5\n", "b.cfg"),
                "--out", tmp_path / "o2") == EXIT_CONFIG
    # theorem hypotheses are only enforced on request
    thm = SMALL + "model.theorem = global_hs\n"
    assert _run("simulate", "--config", _cfg(tmp_path, thm, "c.cfg"), "--out", tmp_path / "o3") == EXIT_CONFIG


def test_simulate_artifacts_and_determinism(tmp_path):
    cfg = _cfg(tmp_path)
    a, b = tmp_path / "a", tmp_path / "b"
    assert _run("simulate", "--config", cfg, "--out", a) == EXIT_OK
    assert _run("simulate", "--config", cfg, "--out", b) == EXIT_OK
    summary = json.loads((a / "summary.json").read_text())
    assert summary["status"] == "ok" and summary["exit_code"] == 0
    assert any("n(lambda-2) > 2" in note for note in summary["admissibility_notes"])
    assert not (a / "FAILED").exists()
    for csv in a.glob("*.csv"):
        assert csv.read_bytes() == (b / csv.name).read_bytes()
    assert (a / "config.txt").read_text() == (b / "config.txt").read_text()
    assert _run("compare", a, b, "--tolerance", "0") == EXIT_OK


def test_compare_detects_difference(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert _run("simulate", "--config", _cfg(tmp_path), "--out", a) == EXIT_OK
    assert _run("simulate", "--config", _cfg(tmp_path, SMALL + "model.delta = 1\n", "d.cfg"), "--out", b) == EXIT_OK
    assert _run("compare", a, b, "--tolerance", "1e-12", "--out", tmp_path / "cmp.json") == 3
    rep = json.loads((tmp_path / "cmp.json").read_text())
    assert rep["max_deviation"] > 1e-12 and not rep["passed"]


def test_divergence_writes_failed_marker(tmp_path):
    text = ("grid.n = 1\ngrid.N = 64\ngrid.L = 20\ntime.dt = 0.01\ntime.T = 4\n"
            "model.delta = 1\ndata.u0_amplitude = 8\nmodel.blowup_factor = 5\n")
    out = tmp_path / "div"
    assert _run("simulate", "--config", _cfg(tmp_path, text), "--out", out) == EXIT_NUMERIC
    assert (out / "FAILED").exists()
    assert json.loads((out / "summary.json").read_text())["status"] == "diverged"


@pytest.mark.parametrize("kind,extra", [
    ("picard", "picard.max_iters = 10\n"),
    ("verify-integrals", ""),
    ("verify-nonlinear", "nonlinear.reps = 5\nnonlinear.N = 64\n"),
    ("oracle-compare", "oracle.times = 0.1, 0.2\noracle.reference_dt = 0.005\n"),
])
def test_other_kinds(tmp_path, kind, extra):
    out = tmp_path / kind
    assert _run(kind, "--config", _cfg(tmp_path, SMALL + extra), "--out", out) == EXIT_OK
    assert json.loads((out / "summary.json").read_text())["kind"] == kind


def test_default_out_uses_env(tmp_path, monkeypatch):
    monkeypatch.setenv("PLATE_OUT", str(tmp_path / "root"))
    assert _run("simulate", "--config", _cfg(tmp_path)) == EXIT_OK
    (run,) = (tmp_path / "root").iterdir()
    assert run.name.startswith("simulate-") and (run / "summary.json").exists()


def test_sweep(tmp_path):
    text = SMALL + "sweep.kind = simulate\nsweep.param = model.delta\nsweep.values = -1, 0, 1\n"
    out = tmp_path / "sw"
    assert _run("sweep", "--config", _cfg(tmp_path, text), "--out", out, "--jobs", "2") == EXIT_OK
    assert sorted(p.name for p in out.glob("point_*")) == ["point_000", "point_001", "point_002"]
    assert (out / "sweep.csv").read_text().count("\n") == 4


def test_config_roundtrip():
    cfg = cfgmod.typed(cfgmod.parse_text(SMALL))
    assert cfgmod.typed(cfgmod.parse_text(cfgmod.dump(cfg))) == cfg


def test_console_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "dampedplate.cli", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "simulate" in res.stdout


def test_compare_resolution_refinement(tmp_path):
    base = "grid.n = 1\ngrid.L = 40\ntime.dt = 0.01\ntime.T = 1\nmodel.delta = 0\n"
    a, b = tmp_path / "a", tmp_path / "b"
    assert _run("simulate", "--config", _cfg(tmp_path, base + "grid.N = 256\n", "a.cfg"), "--out", a) == EXIT_OK
    assert _run("simulate", "--config", _cfg(tmp_path, base + "grid.N = 512\n", "b.cfg"), "--out", b) == EXIT_OK
    assert _run("compare", a, b, "--tolerance", "1e-6") == EXIT_OK


def test_verify_linear_truncation_fails_with_diagnostic(tmp_path):
    # a small periodic box wraps the spreading profile around: the fit degrades
    text = "grid.n = 1\ngrid.N = 256\ngrid.L = 20\nverify.lemmas = dtS_linf\n"
    out = tmp_path / "vl"
    assert _run("verify-linear", "--config", _cfg(tmp_path, text), "--out", out) == 3
    summary = json.loads((out / "summary.json").read_text())
    assert summary["criteria"] == {"dtS_linf": False}
    assert "domain-truncation suspected" in (out / "fits.csv").read_text()
