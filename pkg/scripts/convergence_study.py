#!/usr/bin/env python3
"""Error versus truncation size for the model problems.

Sweeps M over a list of truncation sizes, reporting the max pointwise error
of each model solve and the observed algebraic convergence order between
consecutive sizes.  With coefficients decaying like n^-8 the max error
decays like M^-7, which the printed orders confirm.
"""

import argparse

import numpy as np

from sixbeam import coefficients as cf
from sixbeam import galerkin as gk
from sixbeam.eigenbasis import build_basis


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="*",
                    default=[10, 20, 40, 80, 160],
                    help="truncation sizes M to sweep")
    ap.add_argument("--samples", type=int, default=201)
    args = ap.parse_args()

    xs = np.linspace(-1.0, 1.0, args.samples)
    exact = (xs * xs - 1.0) ** 6
    errs = {spec.name: [] for spec in (gk.MODEL_I, gk.MODEL_II)}

    print(f"{'M':>6} {'model-I error':>16} {'order':>7} "
          f"{'model-II error':>16} {'order':>7}")
    for i, M in enumerate(args.sizes):
        basis = build_basis(M)
        row = [f"{M:6d}"]
        for spec in (gk.MODEL_I, gk.MODEL_II):
            sol = gk.solve_steady(spec, basis)
            err = float(np.max(np.abs(cf.synthesize(sol, xs) - exact)))
            errs[spec.name].append(err)
            if i > 0 and err > 0.0:
                ratio = errs[spec.name][i - 1] / err
                order = np.log(ratio) / np.log(M / args.sizes[i - 1])
                row.append(f"{err:16.3e} {order:7.2f}")
            else:
                row.append(f"{err:16.3e} {'-':>7}")
        print(" ".join(row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
