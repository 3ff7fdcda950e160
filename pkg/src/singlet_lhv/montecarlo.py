"""Event-by-event sampling engine with reproducible parallel streams.

Reproducibility contract: a run is a pure function of its RunConfig.  Pairs
are processed in fixed-size chunks; chunk k draws from the counter-based
Philox stream keyed by (seed << 64) | k, so any chunk can be regenerated in
isolation and the tally is bit-identical no matter how many workers execute
the chunks or in what order they finish.  Each pair consumes exactly two
uniforms, phi = 2*pi*u1 and r = u2, in row order.

derive_seed() hands out decorrelated child seeds for higher-level drivers
(one per sweep row or CHSH setting) through a SplitMix64 mix, keeping every
row independently reproducible from its recorded seed alone.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analytic import ProbQuad
from .errors import EmptyTally, InvalidConfig
from .model import TWO_PI, DetectorSide, HiddenVariable, ModelParams, measure_many

_MASK64 = (1 << 64) - 1

DEFAULT_CHUNK_SIZE = 1 << 16


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def derive_seed(seed: int, index: int) -> int:
    """Decorrelated 64-bit child seed for substream index."""
    if not (0 <= int(seed) <= _MASK64):
        raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    if index < 0:
        raise InvalidConfig(f"index must be nonnegative, got {index!r}")
    return _splitmix64((int(seed) ^ _splitmix64(int(index))) & _MASK64)


def substream(seed: int, index: int) -> np.random.Generator:
    """Counter-based generator for chunk `index` of run `seed`.

    Streams for different (seed, index) pairs never overlap: the pair is the
    Philox key itself, not a state jumped ahead from a shared origin.
    """
    if not (0 <= int(seed) <= _MASK64):
        raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    if not (0 <= int(index) <= _MASK64):
        raise InvalidConfig(f"index must be a 64-bit unsigned integer, got {index!r}")
    return np.random.Generator(np.random.Philox(key=(int(seed) << 64) | int(index)))


def sample_lambda(stream: np.random.Generator) -> HiddenVariable:
    """Draw one hidden variable, consuming exactly two uniforms."""
    u1 = stream.random()
    u2 = stream.random()
    return HiddenVariable(phi=TWO_PI * u1, r=u2)


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's tally."""

    params: ModelParams
    angle_1: float
    angle_2: float
    n_pairs: int
    seed: int
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self) -> None:
        if self.n_pairs < 1:
            raise InvalidConfig(f"n_pairs must be at least 1, got {self.n_pairs!r}")
        if self.chunk_size < 1:
            raise InvalidConfig(f"chunk_size must be at least 1, got {self.chunk_size!r}")
        if not (0 <= self.seed <= _MASK64):
            raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        for name in ("angle_1", "angle_2"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidConfig(f"{name} must be finite")

    @property
    def n_chunks(self) -> int:
        return -(-self.n_pairs // self.chunk_size)


@dataclass(frozen=True)
class Tally:
    """Integer event counts for one run; merging is exact."""

    n_pp: int
    n_pm: int
    n_mp: int
    n_mm: int
    n_single_1: int
    n_single_2: int
    n_none: int
    n_total: int

    def __post_init__(self) -> None:
        counts = (
            self.n_pp, self.n_pm, self.n_mp, self.n_mm,
            self.n_single_1, self.n_single_2, self.n_none,
        )
        if any(k < 0 for k in counts) or self.n_total < 0:
            raise InvalidConfig("tally counts must be nonnegative")
        if sum(counts) != self.n_total:
            raise InvalidConfig(
                f"tally categories sum to {sum(counts)}, not n_total = {self.n_total}"
            )

    @classmethod
    def zero(cls) -> "Tally":
        return cls(0, 0, 0, 0, 0, 0, 0, 0)

    @property
    def n_coincidences(self) -> int:
        return self.n_pp + self.n_pm + self.n_mp + self.n_mm

    def __add__(self, other: "Tally") -> "Tally":
        if not isinstance(other, Tally):
            return NotImplemented
        return Tally(
            self.n_pp + other.n_pp,
            self.n_pm + other.n_pm,
            self.n_mp + other.n_mp,
            self.n_mm + other.n_mm,
            self.n_single_1 + other.n_single_1,
            self.n_single_2 + other.n_single_2,
            self.n_none + other.n_none,
            self.n_total + other.n_total,
        )


def tally_outcomes(o1: np.ndarray, o2: np.ndarray) -> Tally:
    """Fold two outcome arrays in {-1, 0, +1} into a Tally."""
    code = 3 * (o1.astype(np.intp) + 1) + (o2.astype(np.intp) + 1)
    counts = np.bincount(code, minlength=9)
    return Tally(
        n_pp=int(counts[8]),
        n_pm=int(counts[6]),
        n_mp=int(counts[2]),
        n_mm=int(counts[0]),
        n_single_1=int(counts[1] + counts[7]),
        n_single_2=int(counts[3] + counts[5]),
        n_none=int(counts[4]),
        n_total=int(o1.size),
    )


def _chunk_tally(config: RunConfig, k: int) -> Tally:
    start = k * config.chunk_size
    m = min(config.chunk_size, config.n_pairs - start)
    u = substream(config.seed, k).random((m, 2))
    phi = TWO_PI * u[:, 0]
    r = u[:, 1]
    o1 = measure_many(phi, r, config.angle_1, DetectorSide.ONE, config.params)
    o2 = measure_many(phi, r, config.angle_2, DetectorSide.TWO, config.params)
    return tally_outcomes(o1, o2)


def run(config: RunConfig, workers: int | None = None) -> Tally:
    """Simulate the configured pairs and return the merged tally.

    workers = None or 1 runs serially; larger values fan chunks out to a
    thread pool.  The result is identical either way.
    """
    indices = range(config.n_chunks)
    if workers is None or workers <= 1:
        tallies = (_chunk_tally(config, k) for k in indices)
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        try:
            tallies = list(pool.map(lambda k: _chunk_tally(config, k), indices))
        finally:
            pool.shutdown(wait=True)
    total = Tally.zero()
    for t in tallies:
        total = total + t
    return total


@dataclass(frozen=True)
class Estimates:
    """Point estimates from one tally, with binomial standard errors."""

    probs: ProbQuad
    corr: float
    eta_1: float
    eta_2: float
    coincidence_rate: float
    std_errors: dict[str, float]


def estimate(tally: Tally) -> Estimates:
    """Turn counts into rates and the coincidence-conditioned correlation.

    Cell probabilities are per emitted pair (they sum to the coincidence
    rate, near eta**2); the correlation divides by coincidences, so its
    standard error carries the 1/eta penalty.
    """
    nc = tally.n_coincidences
    if nc == 0:
        raise EmptyTally("no coincidences in tally")
    n = tally.n_total
    cells = (tally.n_pp / n, tally.n_pm / n, tally.n_mp / n, tally.n_mm / n)
    corr = (tally.n_pp - tally.n_pm - tally.n_mp + tally.n_mm) / nc
    eta_1 = (nc + tally.n_single_1) / n
    eta_2 = (nc + tally.n_single_2) / n
    coincidence = nc / n

    def binom_se(p: float) -> float:
        return math.sqrt(max(p * (1.0 - p), 0.0) / n)

    se = {
        "p_pp": binom_se(cells[0]),
        "p_pm": binom_se(cells[1]),
        "p_mp": binom_se(cells[2]),
        "p_mm": binom_se(cells[3]),
        "corr": math.sqrt(max(1.0 - corr * corr, 0.0) / nc),
        "eta_1": binom_se(eta_1),
        "eta_2": binom_se(eta_2),
        "coincidence": binom_se(coincidence),
    }
    return Estimates(
        probs=ProbQuad(*cells),
        corr=corr,
        eta_1=eta_1,
        eta_2=eta_2,
        coincidence_rate=coincidence,
        std_errors=se,
    )


@dataclass(frozen=True)
class IndependenceReport:
    """Observed vs expected coincidence rate under independent detection."""

    observed: float
    expected: float
    deviation: float
    threshold: float
    passed: bool


def independence_check(tally: Tally, params: ModelParams) -> IndependenceReport:
    """Five-sigma test that coincidences occur at rate eta**2.

    Detection events at the two stations are independent in this model, so
    the coincidence count is binomial with success probability eta**2.
    """
    p = params.eta * params.eta
    n = tally.n_total
    if n < 1:
        raise InvalidConfig("tally is empty")
    observed = tally.n_coincidences / n
    deviation = abs(observed - p)
    threshold = 5.0 * math.sqrt(p * (1.0 - p) / n)
    return IndependenceReport(
        observed=observed,
        expected=p,
        deviation=deviation,
        threshold=threshold,
        passed=deviation <= threshold,
    )
