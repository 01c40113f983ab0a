"""``plate`` command line: run experiments and persist their outputs.

Every run writes into one directory::

    config.txt      resolved configuration (all keys)
    norms.csv       per-time norms of the trajectory (simulate, picard)
    iterations.csv  Picard distances (picard)
    reports.csv     one row per lemma sample (verify-*, oracle-compare)
    fits.csv        decay fits
    curves/*.dat    two-column plot data, plus plot.gp
    summary.json    written last and atomically; FAILED marks an aborted run

Exit codes: 0 pass, 1 configuration error, 2 numerical failure, 3 criterion failure.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import os
import sys
import tempfile
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import config as cfgmod
from .config import ConfigError
from .grid import Field, make_grid
from .mild import MildSolution, PicardConfig, TimeGrid, march, picard
from .nonlinear import NonlinearityParams
from .norms import NormParams, x_weighted, y_weighted, z_weighted
from .propagator import linear_solution
from .verify import (
    LemmaPoint,
    bandlimited_pairs,
    check_gamma_lemma,
    check_linear_lemma,
    check_nonlinear_estimate,
    check_time_convolution,
    fit_decay,
    make_test_function,
    mode_ode_oracle,
    mol_oracle,
)
from .verify.oracles import IntegratorFailure, NumericalInstability

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_CRITERION = 0, 1, 2, 3
OUT_ENV = "PLATE_OUT"
KINDS = ("simulate", "picard", "verify-linear", "verify-nonlinear", "verify-integrals",
         "oracle-compare", "sweep")

NORM_COLUMNS = ["t", "linf", "hs", "hs_minus1", "hsp", "weighted_y", "weighted_x", "weighted_z"]
REPORT_COLUMNS = ["lemma_id", "params", "t", "lhs", "rhs", "ratio", "c_emp", "passed"]
FIT_COLUMNS = ["name", "t_lo", "t_hi", "slope", "intercept", "r2", "expected", "tol", "n_samples",
               "degenerate", "passed", "diagnostic"]


class NumericalFailure(RuntimeError):
    pass


# --- output ----------------------------------------------------------------

def fmt(v) -> str:
    """Shortest round-trip text for numbers; booleans as true/false."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class RunDir:
    def __init__(self, path: Path):
        self.path = path
        self.path.mkdir(parents=True, exist_ok=True)
        for stale in ("summary.json", "FAILED"):
            (self.path / stale).unlink(missing_ok=True)
        self.artifacts: list[str] = []
        self.curves: list[tuple[str, str]] = []

    def write_csv(self, name: str, columns: list[str], rows) -> None:
        p = self.path / name
        with open(p, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(columns)
            for row in rows:
                w.writerow([fmt(row[c]) for c in columns])
        self.artifacts.append(name)

    def write_curve(self, name: str, x, y, label: str | None = None) -> None:
        d = self.path / "curves"
        d.mkdir(exist_ok=True)
        rel = f"curves/{name}.dat"
        with open(self.path / rel, "w") as fh:
            fh.write(f"# t {name}\n")
            for a, b in zip(x, y):
                fh.write(f"{fmt(a)} {fmt(b)}\n")
        self.artifacts.append(rel)
        self.curves.append((rel, label or name))

    def write_plot_script(self) -> None:
        if not self.curves:
            return
        lines = ["set logscale xy", "set xlabel 't'", "set key left bottom"]
        parts = [f"'{rel}' using 1:2 with lines title '{label}'" for rel, label in self.curves]
        lines.append("plot " + ", \\\n     ".join(parts))
        (self.path / "plot.gp").write_text("\n".join(lines) + "\n")
        self.artifacts.append("plot.gp")

    def finish(self, summary: dict) -> None:
        summary["artifacts"] = sorted(set(self.artifacts))
        atomic_write(self.path / "summary.json", json.dumps(summary, indent=2, sort_keys=True, default=fmt) + "\n")

    def fail(self, summary: dict, message: str) -> None:
        (self.path / "FAILED").write_text(message + "\n")
        summary["status"] = summary.get("status") or "failed"
        summary["error"] = message
        self.finish(summary)


# --- building blocks -------------------------------------------------------

def _data(cfg: dict, grid, which: str, seed: int) -> Field:
    name = cfg[f"data.{which}"]
    amp = cfg[f"data.{which}_amplitude"]
    if name == "zero" or amp == 0:
        return Field.zeros(grid)
    if name == "gaussian":
        return make_test_function(name, grid, width=cfg[f"data.{which}_width"], amplitude=amp)
    if name == "bump":
        return make_test_function(name, grid, radius=cfg[f"data.{which}_width"], amplitude=amp)
    if name == "random_bandlimited":
        return make_test_function(name, grid, seed=seed + (0 if which == "u0" else 1),
                                  modes=cfg["data.modes"], amplitude=amp)
    raise ConfigError(f"data.{which}: unknown test function {name!r}")


def _setup(cfg: dict, seed: int):
    grid = make_grid(cfg["grid.n"], cfg["grid.N"], cfg["grid.L"])
    params = NonlinearityParams(cfg["model.lam"], cfg["model.theta"], cfg["model.delta"], cfg["model.dealias"])
    nparams = NormParams(n=grid.n, s=cfg["norms.s"], p=cfg["norms.p"], theta=params.theta, lam=params.lam,
                         sigma=cfg["norms.sigma"], q=cfg["norms.q"], T=cfg["time.T"])
    spd = cfg["time.samples_per_decade"] or None
    tg = TimeGrid.until(cfg["time.T"], cfg["time.dt"], spd)
    return grid, params, nparams, tg, _data(cfg, grid, "u0", seed), _data(cfg, grid, "u1", seed)


def norm_rows(sol: MildSolution, nparams: NormParams) -> list[dict]:
    idx = sol.recorded()
    rec = sol.norms(nparams, with_bessel=True, indices=idx)
    t = rec["t"]
    y = y_weighted(t, rec["linf"], rec["hs"], rec["hs_minus1"], nparams.alpha1)
    x = x_weighted(t, rec["hsp"], rec["hsp_minus1"], nparams.alpha, nparams.beta)
    z = z_weighted(t, rec["hsp"], rec["hsp_minus1"], nparams.dispersion)
    rows = []
    for i in range(len(t)):
        rows.append({"t": t[i], "linf": rec["linf"][i], "hs": rec["hs"][i], "hs_minus1": rec["hs_minus1"][i],
                     "hsp": rec["hsp"][i], "weighted_y": y[i], "weighted_x": x[i], "weighted_z": z[i]})
    return rows


def _fit_row(name: str, fit) -> dict:
    row = fit.row()
    row["name"] = name
    return row


def _report_rows(rep) -> list[dict]:
    params = ";".join(f"{k}={fmt(v)}" for k, v in rep.params.items())
    return [{"lemma_id": rep.lemma_id, "params": params, "t": t, "lhs": lhs, "rhs": rhs, "ratio": r,
             "c_emp": rep.c_emp, "passed": rep.passed}
            for t, lhs, rhs, r in zip(rep.times, rep.lhs, rep.rhs, rep.ratio)]


def _trajectory_outputs(run: RunDir, cfg: dict, sol: MildSolution, nparams: NormParams) -> dict:
    rows = norm_rows(sol, nparams)
    run.write_csv("norms.csv", NORM_COLUMNS, rows)
    t = np.array([r["t"] for r in rows])
    linf = np.array([r["linf"] for r in rows])
    if cfg["output.curves"]:
        pos = t > 0
        run.write_curve("linf", t[pos], linf[pos], "||u||_inf")
        run.write_curve("hs", t[pos], np.array([r["hs"] for r in rows])[pos], "||u||_Hs")
    lo, hi = cfg["fit.window_lo"], min(cfg["fit.window_hi"], float(t.max()))
    fits = []
    if np.count_nonzero((t >= lo) & (t <= hi)) >= 10:
        fit = fit_decay(t, linf, -nparams.alpha1, (lo, hi), cfg["fit.tol"])
        fits.append(_fit_row("linf", fit))
    run.write_csv("fits.csv", FIT_COLUMNS, fits)
    return {"fits": fits}


# --- experiments -----------------------------------------------------------

def run_simulate(cfg: dict, run: RunDir, seed: int) -> dict:
    grid, params, nparams, tg, u0, u1 = _setup(cfg, seed)
    if cfg["model.solver"] == "mol":
        sol = mol_oracle(u0, u1, params, cfg["time.T"], cfg["time.dt"], cfg["model.convention"], norm_params=nparams)
        sol = MildSolution(grid, tg, sol.u_hat, sol.ut_hat, sol.nonlin_hat, params)
    else:
        sol = march(u0, u1, params, tg, cfg["model.convention"], nparams, cfg["model.blowup_factor"])
    out = _trajectory_outputs(run, cfg, sol, nparams)
    crit = {"trajectory_complete": sol.status == "ok"}
    return {"status": "diverged" if sol.status == "diverged" else "ok", "criteria": crit,
            "steps": len(sol) - 1, "T_reached": float(sol.times[-1]), **out}


def run_picard(cfg: dict, run: RunDir, seed: int) -> dict:
    grid, params, nparams, tg, u0, u1 = _setup(cfg, seed)
    pc = PicardConfig(cfg["picard.max_iters"], cfg["picard.tol"], cfg["picard.ball_radius"],
                      cfg["picard.norm_kind"], nparams)
    res = picard(u0, u1, params, tg, pc, cfg["model.convention"])
    ratios = [math.nan] + list(res.ratios)
    rows = [{"m": m, "distance": d, "ratio": r, "iterate_norm": res.iterate_norms[m + 1]}
            for m, (d, r) in enumerate(zip(res.distances, ratios))]
    run.write_csv("iterations.csv", ["m", "distance", "ratio", "iterate_norm"], rows)
    out = _trajectory_outputs(run, cfg, res.solution, nparams)
    crit = {
        "converged": res.converged,
        "contraction": bool(np.all(res.ratios[np.isfinite(res.ratios)] < 1.0)) and not res.contraction_failed,
        "in_ball": res.in_ball,
    }
    status = "ok" if all(np.isfinite(res.distances)) else "diverged"
    return {"status": status, "criteria": crit, "iterations": res.iterations,
            "distances": res.distances, **out}


def _t_grid(cfg: dict) -> np.ndarray:
    return np.geomspace(cfg["verify.t_min"], cfg["verify.t_max"], cfg["verify.t_samples"])


def run_verify_linear(cfg: dict, run: RunDir, seed: int) -> dict:
    grid = make_grid(cfg["grid.n"], cfg["grid.N"], cfg["grid.L"])
    name = cfg["verify.test_function"]
    if name == "gaussian":
        g = make_test_function(name, grid, width=cfg["verify.width"])
    elif name == "bump":
        g = make_test_function(name, grid, radius=cfg["verify.width"])
    else:
        g = make_test_function(name, grid, seed=seed)
    pt = LemmaPoint(cfg["model.theta"], cfg["norms.s"], cfg["norms.sigma"], cfg["norms.p"], cfg["verify.k"])
    t = _t_grid(cfg)
    hi = cfg["verify.window_hi"] or cfg["verify.t_max"] / 2.0
    rows, fits, crit = [], [], {}
    for lemma in cfg["verify.lemmas"]:
        try:
            rep = check_linear_lemma(lemma, g, pt, t, (cfg["verify.window_lo"], hi), cfg["verify.tol"])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        rows += _report_rows(rep)
        # a fitted rate must also pass; low R^2 carries the truncation diagnostic
        crit[lemma] = rep.passed and (rep.fit is None or rep.fit.passed)
        if rep.fit is not None:
            fits.append(_fit_row(lemma, rep.fit))
        if cfg["output.curves"]:
            run.write_curve(lemma, rep.times, rep.lhs)
    run.write_csv("reports.csv", REPORT_COLUMNS, rows)
    run.write_csv("fits.csv", FIT_COLUMNS, fits)
    return {"status": "ok", "criteria": crit, "fits": fits}


def run_verify_nonlinear(cfg: dict, run: RunDir, seed: int) -> dict:
    rows, crit = [], {}
    sampler = bandlimited_pairs(cfg["nonlinear.modes"])
    for which in cfg["nonlinear.which"]:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rep = check_nonlinear_estimate(which, sampler, cfg["nonlinear.reps"], n=cfg["grid.n"],
                                           N=cfg["nonlinear.N"], L=cfg["nonlinear.L"], s=cfg["nonlinear.s"],
                                           p=cfg["nonlinear.p"], q=cfg["nonlinear.q"], lam=cfg["model.lam"],
                                           seed=seed)
        rows += _report_rows(rep)
        crit[which] = rep.passed
    run.write_csv("reports.csv", REPORT_COLUMNS, rows)
    return {"status": "ok", "criteria": crit}


def run_verify_integrals(cfg: dict, run: RunDir, seed: int) -> dict:
    rows, crit = [], {}
    for n in cfg["integrals.gamma_n"]:
        for a_txt in cfg["integrals.gamma_a"]:
            a = -n + 0.1 if a_txt == "edge" else float(a_txt)
            rep = check_gamma_lemma(a, n, cfg["integrals.gamma_t"])
            rows += _report_rows(rep)
            crit[f"gamma_a={fmt(a)}_n={n}"] = rep.passed
    t = np.geomspace(cfg["integrals.conv_t_min"], cfg["integrals.conv_t_max"], cfg["integrals.conv_samples"])
    for pair in cfg["integrals.conv_pairs"]:
        try:
            a, b = (float(x) for x in pair.split(":"))
        except ValueError:
            raise ConfigError(f"integrals.conv_pairs entry {pair!r} is not 'a:b'") from None
        rep = check_time_convolution(a, b, t)
        rows += _report_rows(rep)
        crit[f"convolution_a={fmt(a)}_b={fmt(b)}"] = rep.passed
        if cfg["output.curves"]:
            run.write_curve(f"convolution_{a:g}_{b:g}", rep.times, rep.ratio)
    run.write_csv("reports.csv", REPORT_COLUMNS, rows)
    return {"status": "ok", "criteria": crit}


def run_oracle_compare(cfg: dict, run: RunDir, seed: int) -> dict:
    grid, params, nparams, tg, u0, u1 = _setup(cfg, seed)
    rows, crit = [], {}
    times = cfg["oracle.times"]
    states = mode_ode_oracle(u0, u1, times)
    errs = []
    for st in states:
        ls = linear_solution(u0, u1, st.t, "ivp")
        denom = st.u.l2() or 1.0
        errs.append((ls.u - st.u).l2() / denom)
    tol = cfg["oracle.linear_tol"]
    rows += [{"lemma_id": "oracle_linear", "params": "convention=ivp", "t": t, "lhs": e, "rhs": tol,
              "ratio": e / tol, "c_emp": max(errs), "passed": max(errs) <= tol} for t, e in zip(times, errs)]
    crit["oracle_linear"] = max(errs) <= tol

    sol = march(u0, u1, params, tg, cfg["model.convention"], nparams)
    ref = mol_oracle(u0, u1, params, cfg["time.T"], cfg["oracle.reference_dt"], cfg["model.convention"],
                     norm_params=nparams)
    uref = ref.u[-1]
    err = float(np.linalg.norm(sol.u[-1] - uref) / (np.linalg.norm(uref) or 1.0))
    tol = cfg["oracle.nonlinear_tol"]
    rows.append({"lemma_id": "oracle_nonlinear", "params": f"convention={cfg['model.convention']}",
                 "t": float(sol.times[-1]), "lhs": err, "rhs": tol, "ratio": err / tol, "c_emp": err,
                 "passed": err <= tol})
    crit["oracle_nonlinear"] = err <= tol
    run.write_csv("reports.csv", REPORT_COLUMNS, rows)
    return {"status": "ok", "criteria": crit}


RUNNERS = {
    "simulate": run_simulate,
    "picard": run_picard,
    "verify-linear": run_verify_linear,
    "verify-nonlinear": run_verify_nonlinear,
    "verify-integrals": run_verify_integrals,
    "oracle-compare": run_oracle_compare,
}


def _exit_code(summary: dict) -> int:
    if summary.get("status") in ("diverged", "failed"):
        return EXIT_NUMERIC
    if not all(summary.get("criteria", {}).values()):
        return EXIT_CRITERION
    return EXIT_OK


def execute(kind: str, cfg: dict, notes: list[str], out: Path, seed: int) -> int:
    """Run one experiment into ``out``; never leaves the directory without a summary."""
    run = RunDir(out)
    (out / "config.txt").write_text(cfgmod.dump(cfg))
    run.artifacts.append("config.txt")
    summary = {"kind": kind, "seed": seed, "config": {k: cfg[k] for k in sorted(cfg)},
               "admissibility_notes": notes, "status": None}
    start = time.perf_counter()
    try:
        summary.update(RUNNERS[kind](cfg, run, seed))
    except ConfigError as exc:
        summary["wall_time"] = time.perf_counter() - start
        run.fail(summary, f"config error: {exc}")
        print(f"plate: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (FloatingPointError, NumericalInstability, IntegratorFailure, NumericalFailure) as exc:
        summary["wall_time"] = time.perf_counter() - start
        summary["status"] = "diverged"
        run.fail(summary, f"numerical failure: {exc}")
        print(f"plate: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except Exception as exc:
        summary["wall_time"] = time.perf_counter() - start
        run.fail(summary, f"{type(exc).__name__}: {exc}")
        raise
    summary["wall_time"] = time.perf_counter() - start
    run.write_plot_script()
    code = _exit_code(summary)
    if summary["status"] == "diverged":
        (out / "FAILED").write_text("diverged\n")
    summary["exit_code"] = code
    run.finish(summary)
    return code


def _sweep_point(kind: str, cfg_text: str, out: str, seed: int) -> int:
    raw = cfgmod.parse_text(cfg_text)
    cfg = cfgmod.typed(raw)
    notes = cfgmod.validate(cfg, kind)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return execute(kind, cfg, notes, Path(out), seed)


def run_sweep(cfg: dict, out: Path, seed: int, jobs: int) -> int:
    kind = cfg["sweep.kind"]
    key = cfg["sweep.param"]
    if kind not in RUNNERS:
        raise ConfigError(f"sweep.kind must be one of {sorted(RUNNERS)}")
    if key not in cfgmod.SCHEMA or key.startswith("sweep."):
        raise ConfigError(f"sweep.param names unknown key {key!r}")
    if not cfg["sweep.values"]:
        raise ConfigError("sweep.values is empty")
    out.mkdir(parents=True, exist_ok=True)
    (out / "FAILED").unlink(missing_ok=True)
    base = cfgmod.parse_text(cfgmod.dump(cfg))
    texts = []
    for value in cfg["sweep.values"]:
        raw = dict(base)
        raw[key] = value
        cfgmod.validate(cfgmod.typed(raw), kind)
        texts.append("".join(f"{k} = {v}\n" for k, v in sorted(raw.items())))
    dirs = [str(out / f"point_{i:03d}") for i in range(len(texts))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            codes = list(pool.map(_sweep_point, [kind] * len(texts), texts, dirs, [seed] * len(texts)))
    else:
        codes = [_sweep_point(kind, t, d, seed) for t, d in zip(texts, dirs)]
    rows = [{"point": i, "value": v, "exit_code": c} for i, (v, c) in enumerate(zip(cfg["sweep.values"], codes))]
    run = RunDir(out)
    (out / "config.txt").write_text(cfgmod.dump(cfg))
    run.artifacts.append("config.txt")
    run.write_csv("sweep.csv", ["point", "value", "exit_code"], rows)
    code = max(codes) if codes else EXIT_OK
    if code == EXIT_NUMERIC:
        (out / "FAILED").write_text("at least one sweep point failed numerically\n")
    run.finish({"kind": "sweep", "param": key, "values": cfg["sweep.values"], "exit_codes": codes,
                "status": "ok" if code != EXIT_NUMERIC else "diverged", "exit_code": code})
    return code


# --- compare ---------------------------------------------------------------

def _read_csv(path: Path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def compare(run_a: Path, run_b: Path, tolerance: float) -> dict:
    """Per-column maximum relative deviation over every CSV the runs share."""
    names = sorted({p.name for p in run_a.glob("*.csv")} & {p.name for p in run_b.glob("*.csv")})
    if not names:
        raise ConfigError("the two runs share no CSV files")
    columns = {}
    for name in names:
        ha, ra = _read_csv(run_a / name)
        hb, rb = _read_csv(run_b / name)
        if ha != hb:
            raise ConfigError(f"schema mismatch in {name}: {ha} vs {hb}")
        if len(ra) != len(rb):
            raise ConfigError(f"row count mismatch in {name}: {len(ra)} vs {len(rb)}")
        for j, col in enumerate(ha):
            try:
                a = np.array([float(r[j]) for r in ra])
                b = np.array([float(r[j]) for r in rb])
            except ValueError:
                same = all(x[j] == y[j] for x, y in zip(ra, rb))
                columns[f"{name}:{col}"] = 0.0 if same else math.inf
                continue
            both_nan = np.isnan(a) & np.isnan(b)
            a, b = a[~both_nan], b[~both_nan]
            if a.size == 0:
                columns[f"{name}:{col}"] = 0.0
                continue
            scale = float(np.max(np.abs(a))) if a.size else 0.0
            dev = float(np.max(np.abs(a - b))) if a.size else 0.0
            if not np.isfinite(dev):
                dev = 0.0 if np.array_equal(a, b) else math.inf
            columns[f"{name}:{col}"] = dev / scale if scale > 0 else dev
    worst = max(columns.values())
    return {"columns": columns, "max_deviation": worst, "tolerance": tolerance, "passed": worst <= tolerance}


# --- entry point -----------------------------------------------------------

def _default_out(kind: str, cfg: dict, seed: int) -> Path:
    root = Path(os.environ.get(OUT_ENV, "runs"))
    digest = hashlib.sha256((cfgmod.dump(cfg) + f"seed={seed}").encode()).hexdigest()[:12]
    return root / f"{kind}-{digest}"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plate", description="Damped plate equation experiments.")
    sub = ap.add_subparsers(dest="command", required=True)
    for kind in KINDS:
        sp = sub.add_parser(kind)
        sp.add_argument("--config", required=True, type=Path)
        sp.add_argument("--out", type=Path, default=None,
                        help=f"run directory (default: ${OUT_ENV}/<kind>-<hash>)")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--jobs", type=int, default=1)
    cp = sub.add_parser("compare")
    cp.add_argument("run_a", type=Path)
    cp.add_argument("run_b", type=Path)
    cp.add_argument("--tolerance", type=float, default=1e-6)
    cp.add_argument("--out", type=Path, default=None, help="write the deviation report as JSON here")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compare":
            rep = compare(args.run_a, args.run_b, args.tolerance)
            for col, dev in sorted(rep["columns"].items()):
                print(f"{col}\t{fmt(dev)}")
            print(f"max deviation {fmt(rep['max_deviation'])} vs tolerance {fmt(args.tolerance)}: "
                  f"{'PASS' if rep['passed'] else 'FAIL'}")
            if args.out is not None:
                args.out.parent.mkdir(parents=True, exist_ok=True)
                atomic_write(args.out, json.dumps(rep, indent=2, sort_keys=True) + "\n")
            return EXIT_OK if rep["passed"] else EXIT_CRITERION
        cfg, notes = cfgmod.load(args.config, args.command)
        seed = cfg["run.seed"] if args.seed is None else args.seed
        cfg["run.seed"] = seed
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        out = args.out or _default_out(args.command, cfg, seed)
        if args.command == "sweep":
            return run_sweep(cfg, out, seed, args.jobs)
        return execute(args.command, cfg, notes, out, seed)
    except ConfigError as exc:
        print(f"plate: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
