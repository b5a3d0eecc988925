"""Monte Carlo study of Engle-Granger on independent random walks, levels vs first differences.

Random numbers
--------------
Every replication ``r`` of an experiment seeded with ``seed`` draws from two
PCG64 generators (O'Neill 2014, numpy's ``PCG64``) keyed by
``SeedSequence(seed, spawn_key=(r, 0))`` for the x innovations and
``SeedSequence(seed, spawn_key=(r, 1))`` for y. Standard normals come from the
basic Box-Muller transform applied to consecutive uniform pairs
``(u1, u2)`` from ``Generator.random()``:
``z = sqrt(-2 log(1 - u1)) * cos(2 pi u2)``, then ``... * sin(2 pi u2)``.
Results therefore depend only on ``(seed, r)``, never on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cointegration import bahar_hausmann, engle_granger
from .errors import CointkitError, ConfigurationError
from .series import TimeSeries

__all__ = [
    "McConfig",
    "ArmSummary",
    "McSummary",
    "HIST_EDGES",
    "replication_streams",
    "box_muller",
    "simulate_random_walk_pair",
    "run_experiment",
    "proposition1_sweep",
]

ARMS = ("levels", "first-differences")
HIST_EDGES = np.arange(-12.0, 2.0 + 0.25, 0.5)


@dataclass(frozen=True)
class McConfig:
    replications: int = 1000
    T: int = 48
    seed: int = 0
    level: float = 0.05
    workers: int = 1

    def __post_init__(self):
        if self.replications < 1:
            raise ConfigurationError("replications must be >= 1")
        if self.T < 10:
            raise ConfigurationError("T must be >= 10")
        if not 0 <= self.seed < 2**64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer")
        if self.level not in (0.01, 0.05, 0.10):
            raise ConfigurationError("level must be 0.01, 0.05 or 0.10")


@dataclass(frozen=True)
class ArmSummary:
    mean: float
    sd: float
    rejection_rate: float
    critical_value: float
    effective_T: int
    statistics: np.ndarray = field(repr=False)
    n_degenerate: int = 0

    @property
    def n_valid(self) -> int:
        return int(np.isfinite(self.statistics).sum())


@dataclass(frozen=True)
class McSummary:
    config: McConfig
    arms: dict
    hist_edges: np.ndarray = field(repr=False)
    hist_counts: dict = field(repr=False)

    @property
    def seed(self) -> int:
        return self.config.seed

    @property
    def levels(self) -> ArmSummary:
        return self.arms["levels"]

    @property
    def diffs(self) -> ArmSummary:
        return self.arms["first-differences"]

    def histogram_rows(self) -> list:
        """Rows of ``(bin_lo, bin_hi, count_levels, count_diffs)``."""
        lv, df = self.hist_counts["levels"], self.hist_counts["first-differences"]
        return [
            (float(self.hist_edges[i]), float(self.hist_edges[i + 1]), int(lv[i]), int(df[i]))
            for i in range(len(lv))
        ]


def replication_streams(seed: int, rep: int):
    """Independent generators for the x and y innovations of replication ``rep``."""
    return tuple(
        np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(rep, k))))
        for k in (0, 1)
    )


def box_muller(rng: np.random.Generator, size: int) -> np.ndarray:
    m = (size + 1) // 2
    u = rng.random(2 * m)
    radius = np.sqrt(-2.0 * np.log1p(-u[0::2]))
    angle = 2.0 * np.pi * u[1::2]
    z = np.empty(2 * m)
    z[0::2] = radius * np.cos(angle)
    z[1::2] = radius * np.sin(angle)
    return z[:size]


def simulate_random_walk_pair(T: int, stream) -> tuple:
    """Two independent driftless Gaussian random walks of length ``T``, both starting at 0.

    ``stream`` is either a pair of generators (x, y) or a single generator
    from which x's innovations are drawn before y's.
    """
    if T < 2:
        raise ConfigurationError("T must be >= 2")
    if isinstance(stream, np.random.Generator):
        gx = gy = stream
    else:
        gx, gy = stream
    walks = []
    for name, g in (("x", gx), ("y", gy)):
        path = np.concatenate(([0.0], np.cumsum(box_muller(g, T - 1))))
        walks.append(TimeSeries(name, path))
    return tuple(walks)


def _replicate(seed: int, T: int, rep: int):
    x, y = simulate_random_walk_pair(T, replication_streams(seed, rep))
    out = []
    for test in (lambda: engle_granger(y, x), lambda: bahar_hausmann(y, x)):
        try:
            r = test()
            out.append((r.statistic, r.critical_values, r.second_stage.context.effective_T))
        except CointkitError:
            out.append(None)
    return out


def _run_chunk(seed: int, T: int, reps: Sequence[int]):
    return [(rep, _replicate(seed, T, rep)) for rep in reps]


def _collect(config: McConfig) -> list:
    reps = range(config.replications)
    if config.workers <= 1:
        results = _run_chunk(config.seed, config.T, reps)
    else:
        chunks = [reps[i :: config.workers] for i in range(config.workers)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = pool.map(_run_chunk, [config.seed] * len(chunks), [config.T] * len(chunks), chunks)
            results = [item for part in parts for item in part]
    results.sort(key=lambda item: item[0])
    return [r for _, r in results]


def _histogram(stats: np.ndarray) -> np.ndarray:
    nbins = len(HIST_EDGES) - 1
    idx = np.floor((stats - HIST_EDGES[0]) / 0.5).astype(int)
    idx = np.clip(idx, 0, nbins - 1)
    return np.bincount(idx, minlength=nbins)


def run_experiment(config: McConfig = McConfig()) -> McSummary:
    """Run both arms for every replication and summarise.

    A replication whose regression is singular is excluded from its arm and
    counted in ``n_degenerate``; rejection rates are over valid replications.
    SDs are sample SDs (``ddof=1``), zero for a single replication.
    """
    rows = _collect(config)
    arms, counts = {}, {}
    for a, arm in enumerate(ARMS):
        stats = np.array([np.nan if r[a] is None else r[a][0] for r in rows])
        ok = np.isfinite(stats)
        valid = stats[ok]
        first = next((r[a] for r in rows if r[a] is not None), None)
        if first is None:
            raise CointkitError(f"every replication of the {arm} arm was degenerate")
        cv = first[1][config.level]
        eff_T = int(first[2])
        arms[arm] = ArmSummary(
            mean=float(valid.mean()),
            sd=float(valid.std(ddof=1)) if valid.size > 1 else 0.0,
            rejection_rate=float(np.mean(valid < cv)),
            critical_value=float(cv),
            effective_T=eff_T,
            statistics=stats,
            n_degenerate=int((~ok).sum()),
        )
        counts[arm] = _histogram(valid)
    return McSummary(config=config, arms=arms, hist_edges=HIST_EDGES.copy(), hist_counts=counts)


def proposition1_sweep(
    T_values: Sequence[int],
    replications: int = 500,
    seed: int = 0,
    level: float = 0.05,
    workers: int = 1,
) -> list:
    """One :func:`run_experiment` per sample size, same seed for each."""
    return [
        run_experiment(McConfig(replications=replications, T=T, seed=seed, level=level, workers=workers))
        for T in T_values
    ]
