#!/usr/bin/env python3
"""Reproduce the pole-extrapolation experiment on the stock potentials.

For each well the script finds every bound state, samples the prefactored
scattering wave near the S-matrix pole, extrapolates to the pole energy,
and reports the worst relative deviation from the bound-state wave over
the comparison window. It finishes with a step-halving rerun of the first
case as a discretization check. Exit status is nonzero if any residual
exceeds its tolerance, so the script doubles as a slow acceptance gate.
"""

from __future__ import annotations

import argparse
import sys

from polewave.onedim import Potential1D, find_bound_1d, pole_extrapolate_1d
from polewave.poletheorem import (
    compare_to_bound,
    extrapolant_samples_near_pole,
    extrapolate_to_pole,
)
from polewave.potentials import PotentialSpec, make_grid, make_potential
from polewave.spectrum import find_bound_states

CASES = [
    # (label, spec, l, step, tolerance per state index)
    ("square U0=4 a=1", PotentialSpec("square", 4.0, 1.0), 0, 1 / 256, [1e-3]),
    ("exponential U0=9 a=0.5", PotentialSpec("exponential", 9.0, 0.5), 0, 1 / 256, [1e-3]),
    ("gaussian U0=4 a=1", PotentialSpec("gaussian", 4.0, 1.0), 0, 1 / 256, [1e-3]),
    ("square U0=30 a=1 (two states)", PotentialSpec("square", 30.0, 1.0), 0, 1 / 512, [1e-2, 1e-3]),
    ("square U0=15 a=1, l=1", PotentialSpec("square", 15.0, 1.0), 1, 1 / 256, [1e-2]),
]


def run_case(label, spec, l, h, tols, order):
    pot = make_potential(spec)
    grid = make_grid(pot, h=h)
    states = find_bound_states(pot, l, grid)
    if len(states) != len(tols):
        print(f"  {label}: expected {len(tols)} states, found {len(states)}")
        return False
    ok = True
    for st, tol in zip(states, tols):
        samples = extrapolant_samples_near_pole(pot, l, st.alpha, grid)
        ext = extrapolate_to_pole(samples, order=order)
        cmp_ = compare_to_bound(ext, st)
        flag = "ok" if cmp_.max_residual < tol else "FAIL"
        kind = "signed" if cmp_.signed else "squared"
        print(
            f"  {label}: alpha={st.alpha:.8f} N={st.asymptotic_norm:.6f} "
            f"max_residual={cmp_.max_residual:.3e} ({kind}, tol {tol:g}) {flag}"
        )
        ok &= cmp_.max_residual < tol
    return ok


def run_oned(order):
    spec = PotentialSpec("square", 4.0, 1.0)
    pot = Potential1D(make_potential(spec))
    grid = make_grid(pot.half, h=1 / 256)
    ok = True
    for parity in ("even", "odd"):
        st = find_bound_1d(pot, parity, grid)[0]
        _, cmp_ = pole_extrapolate_1d(pot, parity, st, grid, order=order)
        flag = "ok" if cmp_.max_residual < 1e-3 else "FAIL"
        print(
            f"  1d square U0=4 a=1 {parity}: alpha={st.alpha:.8f} "
            f"N={st.norm_constant:.6f} max_residual={cmp_.max_residual:.3e} {flag}"
        )
        ok &= cmp_.max_residual < 1e-3
    return ok


def run_halving(order):
    label, spec, l, h, tols = CASES[0]
    pot = make_potential(spec)
    res = {}
    for step in (h, h / 2):
        grid = make_grid(pot, h=step)
        st = find_bound_states(pot, l, grid)[0]
        ext = extrapolate_to_pole(
            extrapolant_samples_near_pole(pot, l, st.alpha, grid), order=order
        )
        res[step] = compare_to_bound(ext, st).max_residual
    print(f"  residual at h={h:.6f}: {res[h]:.3e}; at h/2: {res[h / 2]:.3e}")
    return True


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=2, help="fit order in k^2")
    args = ap.parse_args(argv)

    print("pole extrapolation vs bound states")
    ok = True
    for label, spec, l, h, tols in CASES:
        ok &= run_case(label, spec, l, h, tols, args.order)
    print("one-dimensional wells, both parities")
    ok &= run_oned(args.order)
    print("step-halving check")
    ok &= run_halving(args.order)
    print("all residuals within tolerance" if ok else "SOME RESIDUALS OUT OF TOLERANCE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
