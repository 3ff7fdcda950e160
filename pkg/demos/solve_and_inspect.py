#!/usr/bin/env python3
"""Solve the pattern parameters at a few (eta, v) points and poke the frontier.

The solver turns a target efficiency and visibility into the three pattern
heights (a, b, c).  Past the frontier K*v = 4/eta - 2 no pattern exists and
the solver refuses; exactly at (1, 1) the model degenerates.
"""

import math

from singlet_lhv import (
    DegeneratePoint,
    InfeasibleParameters,
    PatternKind,
    max_visibility,
    solve_params,
)

KINDS = {
    "sin": PatternKind.SYMMETRIZED_SINUSOIDAL,
    "line": PatternKind.SYMMETRIZED_STAIRCASE,
    "unsym": PatternKind.UNSYMMETRIZED_SINUSOIDAL,
}

# ---------- a grid of easy points ----------
print("eta    v     kind    a          b          c")
for eta, v, name in [
    (0.7, 1.0, "sin"),
    (0.7, 1.0, "unsym"),
    (0.7, 0.8, "sin"),
    (0.7, 0.8, "line"),
    (0.5, 0.5, "sin"),
    (1.0, 0.6, "line"),
]:
    p = solve_params(eta, v, KINDS[name])
    print(f"{eta:<6} {v:<5} {name:<7} {p.a:<10.7f} {p.b:<10.7f} {p.c:.7f}")

# ---------- walking into the frontier ----------
# at v = 1 the sinusoidal kinds stop existing above eta = 4/(2 + pi)
eta_star = 4.0 / (2.0 + math.pi)
print(f"\nfull-visibility limit for sin: eta = {eta_star:.12f}")
p = solve_params(eta_star, 1.0, KINDS["sin"])
print(f"exactly at the limit:  a = {p.a:.15f}")
print(f"                       b = {p.b:.15f}   (a = b on the frontier)")

for eta in (0.78, 0.8, 0.9):
    try:
        solve_params(eta, 1.0, KINDS["sin"])
        print(f"eta = {eta}: solvable")
    except InfeasibleParameters as exc:
        print(f"eta = {eta}: refused ({exc})")

# the largest visibility each kind reaches, as a function of eta
print("\neta    max v (sin)  max v (line)")
for eta in (0.5, 0.7, 0.8, 0.9, 1.0):
    vs = max_visibility(eta, KINDS["sin"])
    vl = max_visibility(eta, KINDS["line"])
    print(f"{eta:<6} {vs:<12.7f} {vl:.7f}")

# ---------- the degenerate corner ----------
try:
    solve_params(1.0, 1.0, KINDS["sin"])
except DegeneratePoint as exc:
    print(f"\n(1, 1) is special: {exc}")
