#!/usr/bin/env python3
"""CHSH runs at an interior point and exactly on the efficiency-adjusted bound.

With inefficient detectors the usable CHSH bound relaxes from 2 to
4/eta - 2.  The staircase pattern at visibility (4/eta - 2)/(2*sqrt(2))
lands its S exactly on that bound: the sampled S then hovers around the
bound and the five-sigma convention keeps the verdict honest instead of
flipping a coin.
"""

import math

from singlet_lhv import (
    PatternKind,
    chsh_experiment,
    max_visibility,
    solve_params,
)

PAIRS = 400_000


def report(tag, params, seed):
    rep = chsh_experiment(params, pairs_per_setting=PAIRS, seed=seed)
    print(f"--- {tag} ---")
    for s in rep.settings:
        print(f"  E({s.label}) = {s.corr_mc:+.5f}  (se {s.se:.5f})")
    print(f"  S (sampled) = {rep.s_mc:.5f} +/- {rep.se_s:.5f}")
    print(f"  S (exact)   = {rep.s_oracle:.5f}")
    print(f"  bound 4/eta - 2 = {rep.bound:.5f}")
    margin = (rep.s_mc - rep.bound) / rep.se_s
    print(f"  sampled S sits {margin:+.2f} se from the bound")
    print(f"  violated (5 sigma rule): {rep.violated_mc}\n")
    return rep


# an interior point: S = 2*sqrt(2)*v, comfortably under the bound 3.714
interior = solve_params(0.7, 1.0, PatternKind.SYMMETRIZED_SINUSOIDAL)
report("sinusoidal, eta = 0.7, v = 1", interior, seed=101)

# the frontier: largest staircase visibility at eta = 0.9
eta = 0.9
v_star = max_visibility(eta, PatternKind.SYMMETRIZED_STAIRCASE)
print(f"frontier visibility at eta = {eta}: v* = {v_star:.12f}")
frontier = solve_params(eta, v_star, PatternKind.SYMMETRIZED_STAIRCASE)
rep = report("staircase, eta = 0.9, v = v*", frontier, seed=202)

assert not rep.violated_mc, "a feasible model must never violate its bound"
print("as expected: on the frontier the sampled S may land above or below")
print("the bound by sampling noise, but never beyond five standard errors.")
print(f"(2*sqrt(2) = {2*math.sqrt(2):.5f} would need eta > 2(sqrt(2)-1) "
      f"= {2*(math.sqrt(2)-1):.5f})")
