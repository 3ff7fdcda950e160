#!/usr/bin/env python3
"""Sweep the relative detector angle and compare sampled statistics to the
closed forms.

Station one sits at angle 0, station two walks a uniform grid over [0, pi].
Every row uses its own derived child seed, so the whole table is
reproducible from the one seed below.
"""

import math

from singlet_lhv import PatternKind, solve_params, sweep_gate, theta_sweep

ETA = 0.7
V = 0.8
SEED = 20240817
PAIRS = 200_000

params = solve_params(ETA, V, PatternKind.SYMMETRIZED_SINUSOIDAL)
print(f"eta = {ETA}, v = {V}, pattern heights a = {params.a:.6f}, "
      f"b = {params.b:.6f}, c = {params.c:.6f}")
print(f"{PAIRS} pairs per angle, seed {SEED}\n")

rows = theta_sweep(params, n_steps=9, pairs_per_step=PAIRS, seed=SEED)

print("theta/pi   corr_mc     corr(exact)  p_pp_mc    p_pp(exact)")
for row in rows:
    print(f"{row.theta / math.pi:<10.3f} {row.corr_mc:<+11.5f} "
          f"{row.corr:<+12.5f} {row.p_pp_mc:<10.6f} {row.p_pp:.6f}")

gate = sweep_gate(rows, params)
print(f"\nlargest |corr_mc - corr| = {gate.max_abs_deviation:.5f}")
print(f"worst deviation in standard errors = {gate.max_sigma:.2f} (gate at 5)")
print("sweep gate:", "PASS" if gate.passed else "FAIL")

# at theta = 0 the conditional correlation is exactly -v, so the sweep
# doubles as a visibility measurement
print(f"\nrecovered visibility at theta = 0: {-rows[0].corr_mc:.5f} "
      f"(true value {V})")
