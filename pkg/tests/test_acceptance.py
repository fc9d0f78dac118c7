"""End-to-end acceptance suite.

Each criterion prints exactly one line of the form

    CRITERION <n>: PASS|FAIL -- <measured detail>

and fails the corresponding test if the stated tolerance is not met.  Timed
criteria start their own stopwatch so the reported wall time covers the full
command, including basis construction.
"""

import json
import time

import numpy as np
import pytest

import frozen_reference as ref
from sixbeam import coefficients as cf
from sixbeam import galerkin as gk
from sixbeam import oracle as oc
from sixbeam.cli import main as cli_main
from sixbeam.eigenbasis import build_basis, solve_eigenvalue


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"CRITERION {num}: {'PASS' if ok else 'FAIL'} -- {detail}", flush=True)
    assert ok, f"criterion {num}: {detail}"


def _loglog_slope(values: np.ndarray, indices: np.ndarray) -> float:
    keep = np.abs(values) > 0.0
    design = np.vstack([np.log(indices[keep]),
                        np.ones(np.count_nonzero(keep))]).T
    slope, _ = np.linalg.lstsq(design, np.log(np.abs(values[keep])),
                               rcond=None)[0]
    return float(slope)


def _model_error(sol, points: int = 201) -> float:
    xs = np.linspace(-1.0, 1.0, points)
    return float(np.max(np.abs(cf.synthesize(sol, xs) - (xs * xs - 1.0) ** 6)))


def _tier(err: float) -> str:
    return "stretch" if err <= 5e-13 else "required" if err <= 1e-10 else "unmet"


# ---------------------------------------------------------------------------

def test_criterion_1_eigenvalue_table(tmp_path):
    # The eigenvalue command reproduces the independently tabulated 12-digit
    # table: 22 entries to 5e-11; two published final-digit roundings (even
    # m=5, odd m=6) sit between 5e-11 and 1e-10.  Wall time under 1 s.
    t0 = time.perf_counter()
    stem = str(tmp_path / "eig")
    code = cli_main(["eigenvalues", "--m-max", "6", "--out", stem])
    wall = time.perf_counter() - t0
    rows = {}
    with open(stem + ".table.csv", "r", encoding="utf-8") as fh:
        next(fh)
        for line in fh:
            parts = line.strip().split(",")
            if parts[0] != "0":
                rows[int(parts[0])] = [float(v) for v in parts[1:]]
    rounded = {(5, 0), (6, 2)}  # (m, column) pairs published with a rounding
    tight = loose = 0
    worst = 0.0
    for m, lam_c, asym_c, lam_s, asym_s in ref.TABLE_PUBLISHED:
        for col, published in enumerate((lam_c, asym_c, lam_s, asym_s)):
            diff = abs(rows[m][col] - published)
            gate = 1e-10 if (m, col) in rounded else 5e-11
            if diff > gate:
                _report(1, False,
                        f"entry m={m} col={col} off by {diff:.2e} (> {gate:g})")
            if (m, col) in rounded:
                loose += 1
            else:
                tight += 1
                worst = max(worst, diff)
    ok = code == 0 and tight == 22 and loose == 2 and wall < 1.0
    _report(1, ok, f"22 entries within 5e-11 (worst {worst:.2e}), 2 published "
                   f"roundings within 1e-10, wall {wall:.2f}s < 1s")


def test_criterion_2_asymptotic_approach():
    lam_c6 = solve_eigenvalue("even", 6).lam
    lam_s6 = solve_eigenvalue("odd", 6).lam
    dev_c = abs(lam_c6 - (6 + 1 / 6) * np.pi)
    dev_s = abs(lam_s6 - (6 - 1 / 3) * np.pi)
    ok = dev_c < 1e-10 and dev_s < 1e-9
    _report(2, ok, f"|lam_6^even - (6+1/6)pi| = {dev_c:.2e} < 1e-10, "
                   f"|lam_6^odd - (6-1/3)pi| = {dev_s:.2e} < 1e-9")


def test_criterion_3_model_i_error():
    t0 = time.perf_counter()
    basis = build_basis(100)
    sol = gk.solve_model_I(basis)
    err = _model_error(sol, 201)
    wall = time.perf_counter() - t0
    ok = err <= 1e-10 and wall < 5.0
    _report(3, ok, f"model I max error {err:.3e} at 201 points "
                   f"(tier: {_tier(err)}), wall {wall:.2f}s < 5s")


def test_criterion_4_model_ii_error_and_pivots():
    t0 = time.perf_counter()
    basis = build_basis(100)
    sol = gk.solve_steady(gk.MODEL_II, basis)
    err = _model_error(sol, 201)
    A, _, _ = gk.assemble_steady(gk.MODEL_II, basis)
    _, D = gk.ldlt_factor(A)
    negative = bool(np.all(D < 0.0))
    wall = time.perf_counter() - t0
    ok = err <= 1e-10 and negative and wall < 5.0
    _report(4, ok, f"model II max error {err:.3e} (tier: {_tier(err)}), "
                   f"all {len(D)} LDL^T pivots negative: {negative}, "
                   f"wall {wall:.2f}s")


def test_criterion_5_solution_coefficient_decay(basis100):
    idx = np.arange(50, 101)
    slopes = {}
    for spec in (gk.MODEL_I, gk.MODEL_II):
        sol = gk.solve_steady(spec, basis100)
        slopes[spec.name] = _loglog_slope(sol.uc[50:101], idx)
    ok = all(-8.3 < s < -7.6 for s in slopes.values())
    _report(5, ok, "log-log slope of |u_n| over n in [50, 100]: "
                   + ", ".join(f"{k} {v:.3f}" for k, v in slopes.items())
                   + " (required within [-8.3, -7.6])")


def test_criterion_6_operator_entry_decay(basis100):
    idx = np.arange(50, 101)
    B = cf.operator_matrix(basis100, "even", "second_derivative").entries
    G = cf.operator_matrix(basis100, "even", "fourth_derivative").entries
    # row n = 5 of beta and row n = 3 of gamma over m in [50, 100]; the
    # diagonal is excluded by construction since n < 50.
    beta_slope = _loglog_slope(B[4, 49:100], idx)
    gamma_slope = _loglog_slope(G[2, 49:100], idx)
    ok = -2.2 < beta_slope < -1.7 and -3.3 < gamma_slope < -2.7
    _report(6, ok, f"|beta_5m| slope {beta_slope:.3f} in [-2.2, -1.7]; "
                   f"|gamma_3m| slope {gamma_slope:.3f} in [-3.3, -2.7]")


def test_criterion_7_orthonormality_and_self_adjointness(basis30):
    worst_gram = 0.0
    for parity in ("even", "odd"):
        G = oc.gram_matrix(basis30, parity, 30)
        worst_gram = max(worst_gram, float(np.max(np.abs(G - np.eye(30)))))
    worst_adj = 0.0
    for parity in ("even", "odd"):
        lam = basis30.lam(parity)
        for n in range(1, 16):
            for m in range(n, 16):
                d = oc.adjointness_defect(basis30, parity, n, m)
                worst_adj = max(worst_adj, d / max(lam[n], lam[m]) ** 6)
    ok = worst_gram < 1e-10 and worst_adj < 1e-8
    _report(7, ok, f"30-mode Gram deviation {worst_gram:.2e} < 1e-10; "
                   f"self-adjointness defect (n,m <= 15, relative) "
                   f"{worst_adj:.2e} < 1e-8")


def test_criterion_8_closed_form_verification(tmp_path):
    t0 = time.perf_counter()
    stem = str(tmp_path / "verify")
    code = cli_main(["verify", "--max-index", "20", "--out", stem])
    wall = time.perf_counter() - t0
    with open(stem + ".summary.json", "r", encoding="utf-8") as fh:
        summary = json.load(fh)
    ok = (code == 0 and summary["failed"] == 0 and summary["total"] == 1740
          and len(summary["misprint_notes"]) == 4 and wall < 30.0)
    _report(8, ok, f"{summary['passed']}/{summary['total']} entries within "
                   f"1e-8 relative (worst {summary['worst']['rel_error']:.2e}); "
                   f"{len(summary['misprint_notes'])} superseded variants "
                   f"documented; wall {wall:.1f}s < 30s")


def test_criterion_9_time_integration(basis100):
    # (a) the theta-scheme reproduces its analytic per-mode decay factor
    basis = build_basis(20)
    sys_ = gk.assemble_semi_discrete(basis, B=0.0, T=0.0)
    lam1 = basis.lam_even[1]
    worst_factor = 0.0
    for theta in (0.0, 0.25, 0.5, 1.0):
        dt, steps = 1e-6, 50
        uc = np.zeros(21)
        uc[1] = 1.0
        init = cf.CoefficientSet(basis=basis, u0c=0.0, uc=uc, us=np.zeros(21))
        traj = gk.evolve(sys_, init, dt, steps, theta)
        g = (1.0 - (1.0 - theta) * dt * lam1 ** 6) / (1.0 + theta * dt * lam1 ** 6)
        worst_factor = max(worst_factor,
                           abs(traj[-1].uc[1] - g ** steps) / abs(g) ** steps)
    # (b) Crank-Nicolson converges at O(dt^2) to the exact decay
    t_final = 2.0 / lam1 ** 6
    exact = float(np.exp(-lam1 ** 6 * t_final))
    errs = []
    for steps in (20, 40, 80):
        uc = np.zeros(21)
        uc[1] = 1.0
        init = cf.CoefficientSet(basis=basis, u0c=0.0, uc=uc, us=np.zeros(21))
        traj = gk.evolve(sys_, init, t_final / steps, steps, 0.5)
        errs.append(abs(traj[-1].uc[1] - exact))
    ratios = (errs[0] / errs[1], errs[1] / errs[2])
    second_order = all(abs(r - 4.0) < 0.8 for r in ratios)
    # (c) the forced model-II system relaxes to the steady Galerkin solution
    sys2 = gk.model_ii_semi_discrete(basis100)
    traj = gk.evolve(sys2, cf.CoefficientSet.zeros(basis100),
                     dt=1e-4, steps=200, theta=1.0)
    steady = gk.solve_steady(gk.MODEL_II, basis100)
    final = traj[-1]
    dev = max(abs(final.u0c - steady.u0c),
              float(np.max(np.abs(final.uc - steady.uc))),
              float(np.max(np.abs(final.us - steady.us))))
    ok = worst_factor < 1e-14 and second_order and dev < 1e-8
    _report(9, ok, f"decay factor deviation {worst_factor:.2e} < 1e-14; "
                   f"Crank-Nicolson dt-halving ratios {ratios[0]:.2f}, "
                   f"{ratios[1]:.2f} (~4); long-time model II vs steady "
                   f"{dev:.2e} < 1e-8")


def test_criterion_10_overflow_instrumentation():
    with np.errstate(over="raise", invalid="raise"):
        big = build_basis(200)
        assert big.M == 200
        basis = build_basis(150)
        sol = gk.solve_steady(gk.MODEL_II, basis)
        err = _model_error(sol, 101)
    ok = bool(np.isfinite(err)) and err < 1e-10
    _report(10, ok, f"build_basis(200) and model II at M = 150 ran under "
                    f"overflow/invalid traps; M = 150 error {err:.3e}")
