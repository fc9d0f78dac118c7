#!/usr/bin/env python3
"""Fit power laws to the decay of operator-matrix rows and solution
coefficients.

For a fixed row n the off-diagonal second-derivative entries decay like
m^-2 and the fourth-derivative entries like m^-3; the solution coefficients
of the model problems decay like n^-8 (one power faster than the n^-7
bound suggested by the boundary behaviour, because the leading boundary
term cancels in these particular solutions).  Fits are ordinary least
squares on (log m, log |value|) over a configurable index window.
"""

import argparse

import numpy as np

from sixbeam import coefficients as cf
from sixbeam import galerkin as gk
from sixbeam.eigenbasis import build_basis


def loglog_fit(indices: np.ndarray, values: np.ndarray):
    keep = np.abs(values) > 0.0
    design = np.vstack([np.log(indices[keep]),
                        np.ones(np.count_nonzero(keep))]).T
    slope, intercept = np.linalg.lstsq(design, np.log(np.abs(values[keep])),
                                       rcond=None)[0]
    return float(slope), float(np.exp(intercept))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--M", type=int, default=100, help="modes per family")
    ap.add_argument("--window-lo", type=int, default=50,
                    help="first index of the fit window")
    ap.add_argument("--rows", type=int, nargs="*", default=[3, 5],
                    help="operator rows n to fit")
    args = ap.parse_args()

    basis = build_basis(args.M)
    lo, hi = args.window_lo, args.M
    idx = np.arange(lo, hi + 1)
    print(f"fit window: m in [{lo}, {hi}] (diagonal excluded)\n")

    for parity in ("even", "odd"):
        B = cf.operator_matrix(basis, parity, "second_derivative").entries
        G = cf.operator_matrix(basis, parity, "fourth_derivative").entries
        for n in args.rows:
            for name, table in (("beta", B), ("gamma", G)):
                vals = table[n - 1, lo - 1:hi].copy()
                if lo <= n <= hi:
                    vals[n - lo] = 0.0  # excluded from the fit
                slope, coeff = loglog_fit(idx, vals)
                print(f"  |{name}_{n}m| ({parity}):  {coeff:10.1f} * m^{slope:.3f}")
        print()

    for p in cf.CHI_POWERS:
        slope, coeff = loglog_fit(idx, cf.chi_vector(basis, p)[lo - 1:hi])
        print(f"  |chi^{p}_m|:  {coeff:8.3f} * m^{slope:.3f}")
    print()

    for spec in (gk.MODEL_I, gk.MODEL_II):
        sol = gk.solve_steady(spec, basis)
        slope, coeff = loglog_fit(idx, sol.uc[lo:hi + 1])
        print(f"  |u_n| ({spec.name}):  {coeff:8.1f} * n^{slope:.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
