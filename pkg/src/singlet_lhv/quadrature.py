"""Deterministic integration of the detector patterns, no sampling involved.

Computes the full 3x3 joint outcome table for one pair of settings by
integrating the pattern geometry directly, giving an oracle for Monte Carlo
results that shares no code path with the sampling engine beyond the
measurement function itself.

Method.  For fixed phi the joint outcome is piecewise constant in r, with a
handful of region boundaries (core height, error-band cap, the half split,
and the detection-band edge on each station).  Those boundaries are
recovered per phi node by probing a dense r grid, then bisecting every
probe interval whose endpoints disagree; each probe then owns the r-length
between the refined edges around it, which sums segment lengths into one
length per joint label, exactly.  In phi the per-label lengths are analytic
except at kinks located where either station's shifted phase crosses a
multiple of pi/4, so the outer integral splits [0, 2*pi) at
angle_i + k*pi/4 and applies Gauss-Legendre on each piece.  The result
carries roughly 1e-11 absolute accuracy at the default knobs, far below the
tolerances it is used to certify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import ProbQuad
from .errors import InvalidConfig
from .model import TWO_PI, DetectorSide, ModelParams, measure_many

_ANCHOR_EPS = 1e-12


@dataclass(frozen=True)
class PatternIntegral:
    """Joint outcome probabilities as a 3x3 table indexed by outcome sign."""

    table: np.ndarray
    angle_1: float
    angle_2: float

    def joint(self, o1: int, o2: int) -> float:
        """Probability of outcome pair (o1, o2), each in {-1, 0, +1}."""
        if o1 not in (-1, 0, 1) or o2 not in (-1, 0, 1):
            raise InvalidConfig(f"outcomes must be in {{-1, 0, 1}}, got {(o1, o2)!r}")
        return float(self.table[o1 + 1, o2 + 1])

    def prob_quad(self) -> ProbQuad:
        return ProbQuad(
            p_pp=self.joint(1, 1),
            p_pm=self.joint(1, -1),
            p_mp=self.joint(-1, 1),
            p_mm=self.joint(-1, -1),
        )

    def marginal(self, side: DetectorSide) -> tuple[float, float, float]:
        """(P(+1), P(-1), P(0)) for one station; accepts 1 or 2 as well."""
        try:
            side = DetectorSide(side)
        except ValueError:
            raise InvalidConfig(f"side must be a detector side, got {side!r}") from None
        axis = 1 if side is DetectorSide.ONE else 0
        sums = self.table.sum(axis=axis)
        return (float(sums[2]), float(sums[0]), float(sums[1]))

    def coincidence(self) -> float:
        q = self.prob_quad()
        return q.total()

    def total(self) -> float:
        return float(self.table.sum())


def _breakpoints(angle_1: float, angle_2: float) -> np.ndarray:
    pts = []
    for alpha in (angle_1, angle_2):
        for k in range(8):
            pts.append(math.fmod(alpha + k * 0.25 * math.pi, TWO_PI))
    pts = np.mod(np.array(pts, dtype=float), TWO_PI)
    pts = np.unique(np.concatenate([pts, [0.0, TWO_PI]]))
    return pts


def _labels(
    phi: np.ndarray, r: np.ndarray, angle_1: float, angle_2: float, params: ModelParams
) -> np.ndarray:
    o1 = measure_many(phi, r, angle_1, DetectorSide.ONE, params)
    o2 = measure_many(phi, r, angle_2, DetectorSide.TWO, params)
    return 3 * (o1.astype(np.intp) + 1) + (o2.astype(np.intp) + 1)


def outcome_probabilities(
    params: ModelParams,
    angle_1: float,
    angle_2: float,
    *,
    r_probes: int = 4096,
    gl_order: int = 24,
    bisect_iters: int = 60,
) -> PatternIntegral:
    """Integrate the joint outcome table for one setting pair.

    The knobs trade accuracy for time; the defaults already sit near the
    floating-point floor.  r_probes controls how fine the initial r scan
    is (regions thinner than 1/r_probes next to another boundary can be
    missed, which the default makes irrelevant for solved parameters).
    """
    if r_probes < 16:
        raise InvalidConfig(f"r_probes must be at least 16, got {r_probes!r}")
    if gl_order < 2:
        raise InvalidConfig(f"gl_order must be at least 2, got {gl_order!r}")
    if bisect_iters < 1:
        raise InvalidConfig(f"bisect_iters must be at least 1, got {bisect_iters!r}")

    edges = _breakpoints(angle_1, angle_2)
    x, wts = np.polynomial.legendre.leggauss(gl_order)
    nodes = []
    weights = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi - lo <= 1e-15:
            continue
        half = 0.5 * (hi - lo)
        nodes.append(half * x + 0.5 * (hi + lo))
        weights.append(half * wts)
    phi_nodes = np.concatenate(nodes)
    phi_weights = np.concatenate(weights)
    n_phi = phi_nodes.size

    probes = (np.arange(r_probes) + 0.5) / r_probes
    anchors = np.array(
        [_ANCHOR_EPS, 0.5 - _ANCHOR_EPS, 0.5 + _ANCHOR_EPS, 1.0 - _ANCHOR_EPS]
    )
    probes = np.unique(np.concatenate([probes, anchors]))
    n_probe = probes.size

    phi_flat = np.repeat(phi_nodes, n_probe)
    r_flat = np.tile(probes, n_phi)
    labels = _labels(phi_flat, r_flat, angle_1, angle_2, params).reshape(n_phi, n_probe)

    # Refine every probe interval whose endpoints carry different labels.
    ii, jj = np.nonzero(labels[:, :-1] != labels[:, 1:])
    lo = probes[jj].copy()
    hi = probes[jj + 1].copy()
    lab_lo = labels[ii, jj]
    phi_gap = phi_nodes[ii]
    for _ in range(bisect_iters):
        mid = 0.5 * (lo + hi)
        lab_mid = _labels(phi_gap, mid, angle_1, angle_2, params)
        take = lab_mid == lab_lo
        lo = np.where(take, mid, lo)
        hi = np.where(take, hi, mid)

    interior = np.broadcast_to(
        0.5 * (probes[:-1] + probes[1:]), (n_phi, n_probe - 1)
    ).copy()
    interior[ii, jj] = 0.5 * (lo + hi)
    grid_edges = np.empty((n_phi, n_probe + 1))
    grid_edges[:, 0] = 0.0
    grid_edges[:, -1] = 1.0
    grid_edges[:, 1:-1] = interior
    seg = grid_edges[:, 1:] - grid_edges[:, :-1]

    length_by_label = np.zeros((n_phi, 9))
    for lab in range(9):
        length_by_label[:, lab] = np.where(labels == lab, seg, 0.0).sum(axis=1)

    integral = phi_weights @ length_by_label / TWO_PI
    return PatternIntegral(
        table=integral.reshape(3, 3), angle_1=angle_1, angle_2=angle_2
    )
