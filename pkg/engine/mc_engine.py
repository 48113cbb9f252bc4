"""
Monte Carlo engine for aggregate PON offered traffic.

Trials are generated in fixed blocks of TRIAL_BLOCK_SIZE; block b draws
from its own stream SeedSequence(seed, spawn_key=(TRIAL_STREAM, b)), so a
trial's value depends only on (seed, trial index) and never on how many
worker threads ran the blocks.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from domain.models import (BoxplotStats, ForecastParams, PercentileEstimate, ScenarioConfig,
                           SimulationSummary, TrafficDemand, TrialSet, ZipfPopulation)
from engine.forecast import project_demand
from engine.zipf_model import build_population
from utils.constants import (BOOTSTRAP_BATCH_SIZE, BOOTSTRAP_STREAM, LOG_MESSAGES,
                             TRIAL_BLOCK_SIZE, TRIAL_STREAM, TUKEY_WHISKER_IQR)

logger = logging.getLogger(__name__)


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(TRIAL_STREAM, block)))


def simulate_aggregate(pop: ZipfPopulation, config: ScenarioConfig) -> TrialSet:
    """Sum split_n users drawn uniformly with replacement from the population, T times"""
    blocks = math.ceil(config.trials / TRIAL_BLOCK_SIZE)

    def run_block(block: int) -> np.ndarray:
        count = min(TRIAL_BLOCK_SIZE, config.trials - block * TRIAL_BLOCK_SIZE)
        ranks = _block_rng(config.seed, block).integers(0, pop.size, size=(count, config.split_n))
        return pop.values[ranks].sum(axis=1)

    logger.debug(f"Running {blocks} blocks on {config.workers} worker(s)")
    if config.workers == 1 or blocks == 1:
        parts = [run_block(block) for block in range(blocks)]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(run_block, range(blocks)))

    return TrialSet(samples=np.concatenate(parts), population=pop,
                    split_n=config.split_n, seed=config.seed)


def empirical_percentile(samples: Sequence[float], p: float) -> float:
    """Linear-interpolation quantile, h = 1 + (n - 1) p over the sorted samples"""
    data = np.asarray(samples, dtype=np.float64)
    if data.size == 0:
        raise ValueError("cannot take a percentile of an empty sample")
    if not 0 < p < 1:
        raise ValueError(f"percentile must be in (0, 1), got {p}")
    return float(np.quantile(data, p, method="linear"))


def bootstrap_percentiles(trialset: TrialSet, ps: Sequence[float], reps: int,
                          confidence: float, seed: int) -> List[PercentileEstimate]:
    """Percentile-bootstrap confidence intervals for several levels sharing one set of resamples"""
    samples = trialset.samples
    ps = list(ps)
    if samples.size == 0:
        raise ValueError("cannot bootstrap an empty trial set")
    if reps < 1:
        raise ValueError(f"bootstrap reps must be >= 1, got {reps}")
    if not 0 < confidence < 1:
        raise ValueError(f"confidence must be in (0, 1), got {confidence}")

    points = np.quantile(samples, ps, method="linear")
    if samples.min() == samples.max():
        return [PercentileEstimate(p, float(x), float(x), float(x)) for p, x in zip(ps, points)]

    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(BOOTSTRAP_STREAM,)))
    n = samples.size
    replicates = np.empty((reps, len(ps)))
    for start in range(0, reps, BOOTSTRAP_BATCH_SIZE):
        count = min(BOOTSTRAP_BATCH_SIZE, reps - start)
        resamples = samples[rng.integers(0, n, size=(count, n))]
        replicates[start:start + count] = np.quantile(resamples, ps, axis=1, method="linear").T

    tail = (1 - confidence) / 2
    lows, highs = np.quantile(replicates, [tail, 1 - tail], axis=0, method="linear")

    # The percentile interval need not contain the full-sample point; widen it so it does
    return [
        PercentileEstimate(p, float(point), float(min(low, point)), float(max(high, point)))
        for p, point, low, high in zip(ps, points, lows, highs)
    ]


def bootstrap_ci(trialset: TrialSet, p: float, reps: int, confidence: float,
                 seed: int) -> PercentileEstimate:
    """Percentile-bootstrap confidence interval for one percentile level"""
    return bootstrap_percentiles(trialset, [p], reps, confidence, seed)[0]


def boxplot_stats(samples: Sequence[float]) -> BoxplotStats:
    """Tukey five-number summary, whiskers at the extreme samples within 1.5 IQR"""
    data = np.asarray(samples, dtype=np.float64)
    if data.size == 0:
        raise ValueError("cannot summarize an empty sample")

    q1, median, q3 = np.quantile(data, [0.25, 0.5, 0.75], method="linear")
    reach = TUKEY_WHISKER_IQR * (q3 - q1)
    low = data[data >= q1 - reach].min()
    high = data[data <= q3 + reach].max()
    return BoxplotStats(
        whisker_low=float(min(low, q1)),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        whisker_high=float(max(high, q3)),
    )


def summarize(trialset: TrialSet, demand: TrafficDemand, config: ScenarioConfig) -> SimulationSummary:
    """Percentile estimates and boxplot of a trial set"""
    samples = trialset.samples
    estimates = bootstrap_percentiles(trialset, config.percentiles, config.bootstrap_reps,
                                      config.confidence, config.seed)
    return SimulationSummary(
        year=demand.year,
        split_n=trialset.split_n,
        demand=demand,
        estimates=tuple(estimates),
        boxplot=boxplot_stats(samples),
        trials=len(trialset),
        mean_mbps=float(samples.mean()),
        std_mbps=float(samples.std(ddof=1)) if samples.size > 1 else 0.0,
    )


def run_scenario(params: ForecastParams, year: int, config: ScenarioConfig) -> SimulationSummary:
    """Forecast demand, build the population at the peak rate, simulate and summarize"""
    start = time.perf_counter()
    logger.info(LOG_MESSAGES["scenario_start"].format(year=year, split=config.split_n, trials=config.trials))

    demand = project_demand(params, year)
    pop = build_population(config.population_size, config.alpha, demand.peak_mbps)
    summary = summarize(simulate_aggregate(pop, config), demand, config)

    logger.info(LOG_MESSAGES["scenario_done"].format(
        year=year, split=config.split_n, elapsed=time.perf_counter() - start
    ))
    return summary


def scale_summary(summary: SimulationSummary, factor: float, demand: TrafficDemand) -> SimulationSummary:
    """Re-express a summary for a demand that is factor times the simulated one"""
    if factor < 0:
        raise ValueError(f"scale factor must be >= 0, got {factor}")
    return SimulationSummary(
        year=demand.year,
        split_n=summary.split_n,
        demand=demand,
        estimates=tuple(estimate.scaled(factor) for estimate in summary.estimates),
        boxplot=summary.boxplot.scaled(factor),
        trials=summary.trials,
        mean_mbps=summary.mean_mbps * factor,
        std_mbps=summary.std_mbps * factor,
    )
