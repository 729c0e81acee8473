"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line with the measured quantities."""

import itertools
import time
from dataclasses import replace

import numpy as np
import pytest

from dmabeam import (SystemConfig, build_channel, intrinsic_channel,
                     lorentzian_of_phase, optimize, sample_paths,
                     select_strips, spectral_efficiency, strip_gains,
                     update_phase)
from dmabeam.baselines import (SchemeId, dma_incompact, fully_digital,
                               half_wave_config, incompact_config,
                               ps_hybrid_partial)
from dmabeam.cli import main
from dmabeam.harness import SweepKind, SweepSpec, run_sweep
from dmabeam.optimizer import coordinate_ascent
from dmabeam.weights import DmaWeights

from conftest import make_channel


def report(name: str, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE [{name}]: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def default_runs():
    """100 optimizer runs on random default-geometry instances."""
    cfg = SystemConfig()
    start = time.perf_counter()
    runs = []
    for seed in range(100):
        ch = make_channel(cfg, 10_000 + seed)
        sol, trace = optimize(ch, cfg, np.random.default_rng(seed))
        runs.append((sol, trace))
    return cfg, runs, time.perf_counter() - start


def test_feasibility_suite(default_runs):
    cfg, runs, elapsed = default_runs
    worst_pow = worst_circle = 0.0
    ok = True
    for sol, _ in runs:
        worst_pow = max(worst_pow, abs(np.linalg.norm(sol.w) ** 2
                                       / cfg.tx_power - 1.0))
        worst_circle = max(worst_circle, float(np.max(np.abs(
            np.abs(sol.weights.weights - 0.5j) - 0.5))))
        ok &= np.count_nonzero(sol.w) <= cfg.n_rf
    ok &= worst_pow < 1e-9 and worst_circle < 1e-9 and elapsed < 60.0
    report("feasibility", ok,
           f"max |power err|={worst_pow:.2e}, max circle dev={worst_circle:.2e}, "
           f"runtime={elapsed:.1f}s")


def test_monotone_convergence(default_runs):
    cfg, runs, _ = default_runs
    worst_drop = 0.0
    max_iters = 0
    for sol, trace in runs:
        t = np.array(trace.snr_per_iteration)
        if len(t) > 1:
            worst_drop = max(worst_drop, float(-np.min(np.diff(t))))
        max_iters = max(max_iters, sol.outer_iterations)
    ok = worst_drop <= 1e-12 and max_iters <= 100
    report("monotone-convergence", ok,
           f"worst decrease={worst_drop:.2e}, max outer iters={max_iters}")


def test_selection_oracle():
    rng = np.random.default_rng(314)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 7))
        m = int(rng.integers(1, 4))
        n_rf = int(rng.integers(1, n + 1))
        cfg = SystemConfig(n_strips=n, m_elements=m, n_rf=n_rf,
                           n_paths=int(rng.integers(1, 5)))
        ch = build_channel(sample_paths(cfg, rng), cfg)
        weights = DmaWeights(rng.uniform(0, 2 * np.pi, (n, m)))
        gains = strip_gains(ch, weights)
        chosen = float(np.sum(gains[select_strips(gains, n_rf)]))
        best = max(float(np.sum(gains[list(s)]))
                   for s in itertools.combinations(range(n), n_rf))
        if best > 0:
            worst = max(worst, abs(chosen - best) / best)
    ok = worst < 1e-10
    report("selection-oracle", ok, f"max rel SNR deficit={worst:.2e}")


def test_phase_oracle():
    rng = np.random.default_rng(2718)
    phi = np.linspace(0, 2 * np.pi, 720, endpoint=False)
    g_grid = lorentzian_of_phase(phi)
    worst_ratio = np.inf
    worst_angle = 0.0
    for _ in range(50):
        h = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        grid_max = float(np.max(np.abs(
            np.conj(h[0]) * g_grid[:, None]
            + np.conj(h[1]) * g_grid[None, :]) ** 2))
        h_sel = h[None, :]
        best_obj, best_b = -1.0, None
        for _ in range(16):
            w0 = DmaWeights(rng.uniform(0, 2 * np.pi, (1, 2)))
            out = coordinate_ascent(h_sel, w0, [0], 1e-12, 2000)
            obj = abs(np.vdot(h, out.weights[0])) ** 2
            if obj > best_obj:
                best_obj, best_b = obj, out.circle_vars
        worst_ratio = min(worst_ratio, best_obj / grid_max)
        for m in range(2):
            opt = update_phase(h_sel, best_b, 0, m)
            worst_angle = max(worst_angle,
                              abs(float(np.angle(best_b[0, m] / opt))))
    ok = worst_ratio >= 0.999 and worst_angle < 1e-6
    report("phase-oracle", ok,
           f"min ratio to grid optimum={worst_ratio:.6f}, "
           f"max stationarity residual={worst_angle:.2e} rad")


@pytest.fixture(scope="module")
def power_sweep_rows():
    spec = SweepSpec(kind=SweepKind.POWER,
                     values=(-10.0, -5.0, 0.0, 5.0, 10.0),
                     schemes=(SchemeId.PROPOSED, SchemeId.DMA_FULL_RF,
                              SchemeId.RANDOM_SELECTION),
                     trials=200, master_seed=2024)
    return {(r.scheme, r.swept_value): r for r in run_sweep(SystemConfig(), spec)}


def test_rf_reduction_claim(power_sweep_rows):
    rows = power_sweep_rows
    gaps, ok = [], True
    for v in (-10.0, -5.0, 0.0, 5.0, 10.0):
        prop = rows[(SchemeId.PROPOSED, v)].mean_se
        full = rows[(SchemeId.DMA_FULL_RF, v)].mean_se
        rand = rows[(SchemeId.RANDOM_SELECTION, v)].mean_se
        gap = 1.0 - prop / full
        gaps.append(f"{v:+.0f}dBm:{gap:.1%}")
        ok &= gap <= 0.10
        ok &= prop > rand
    report("rf-reduction-75pct", ok,
           "proposed vs full-RF relative gap per point: " + ", ".join(gaps)
           + "; proposed > random at every point: "
           + str(all(rows[(SchemeId.PROPOSED, v)].mean_se
                     > rows[(SchemeId.RANDOM_SELECTION, v)].mean_se
                     for v in (-10.0, -5.0, 0.0, 5.0, 10.0))))


def test_diminishing_returns():
    spec = SweepSpec(kind=SweepKind.RF,
                     values=tuple(float(v) for v in range(1, 11)),
                     schemes=(SchemeId.PROPOSED,), trials=200,
                     master_seed=777)
    rows = run_sweep(SystemConfig(), spec)
    mean = {int(r.swept_value): r.mean_se for r in rows}
    stderr = {int(r.swept_value): r.std_se / np.sqrt(r.trials) for r in rows}
    gain_low = mean[5] - mean[1]
    gain_high = mean[10] - mean[5]
    monotone = all(mean[k + 1] >= mean[k] - stderr[k] for k in range(1, 10))
    ok = gain_high < gain_low and monotone
    report("diminishing-returns", ok,
           f"SE gain 1->5 = {gain_low:.3f}, 5->10 = {gain_high:.3f}, "
           f"monotone within 1 stderr: {monotone}")


def test_ordering_properties():
    cfg = SystemConfig()  # 0 dBm transmit power by default
    cfg_half = half_wave_config(cfg)
    cfg_inc = incompact_config(cfg)
    per_trial_ok = True
    se = {k: [] for k in ("prop", "full", "inc", "fd", "ps")}
    for trial in range(200):
        seeds = np.random.SeedSequence([55, trial]).spawn(4)
        paths = sample_paths(cfg, np.random.default_rng(seeds[0]))
        ch = build_channel(paths, cfg)
        sol_p, _ = optimize(ch, cfg, np.random.default_rng(seeds[1]))
        sol_f, _ = optimize(ch, replace(cfg, n_rf=cfg.n_strips),
                            np.random.default_rng(seeds[1]))
        per_trial_ok &= (sol_f.spectral_efficiency
                         >= sol_p.spectral_efficiency - 1e-9)
        se["prop"].append(sol_p.spectral_efficiency)
        se["full"].append(sol_f.spectral_efficiency)
        h_inc = build_channel(paths, cfg_inc)
        se["inc"].append(dma_incompact(h_inc, cfg_inc,
                                       np.random.default_rng(seeds[2])))
        h_hat = intrinsic_channel(paths, cfg_half)
        se["fd"].append(fully_digital(h_hat, cfg.tx_power, cfg.noise_var))
        se["ps"].append(ps_hybrid_partial(h_hat, cfg_half, cfg.n_rf))
    means = {k: float(np.mean(v)) for k, v in se.items()}
    ok = (per_trial_ok and means["fd"] >= means["ps"]
          and means["prop"] >= means["inc"])
    report("ordering", ok,
           f"full>=prop per trial: {per_trial_ok}; mean SE "
           f"fd={means['fd']:.2f} ps={means['ps']:.2f} "
           f"prop={means['prop']:.2f} inc={means['inc']:.2f}")


def test_determinism(tmp_path):
    cfg_file = tmp_path / "c.cfg"
    cfg_file.write_text("")  # full defaults
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["power-sweep", "--trials", "3", "--seed", "99",
            "--config", str(cfg_file), "--values=-5,5"]
    main(args + ["--out", str(out1)])
    main(args + ["--out", str(out2)])
    ok = out1.read_bytes() == out2.read_bytes()
    report("determinism", ok, f"{out1.stat().st_size} byte CSVs identical: {ok}")
