"""
Zipf population of per-user offered bandwidths.

A user's offered bandwidth is v_K where the rank K is drawn uniformly from
1..size and v_k = c * k^-alpha, with c chosen so the population mean equals
the target. Shares and calibration statistics are computed over ranks with
equal weight 1/size.
"""

import math
from typing import Iterable, List, Tuple

import numpy as np

from domain.models import ZipfPopulation


def build_population(size: int, alpha: float, mean_target: float) -> ZipfPopulation:
    """Build the ranked population scaled to mean_target Mb/s"""
    if size < 1:
        raise ValueError(f"population size must be >= 1, got {size}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if mean_target <= 0:
        raise ValueError(f"mean target must be > 0, got {mean_target}")

    weights = np.arange(1, size + 1, dtype=np.float64) ** -alpha
    values = mean_target * (size * weights / weights.sum())
    return ZipfPopulation(size=size, alpha=alpha, mean_target=mean_target, values=values)


def _top_count(size: int, fraction: float) -> int:
    if not 0 < fraction <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    # floor with a small tolerance so 0.03 * 100 counts as 3 users
    return max(1, math.floor(fraction * size + 1e-9))


def share_of_top(pop: ZipfPopulation, fraction: float) -> float:
    """Share of total traffic offered by the heaviest fraction of ranks"""
    m = _top_count(pop.size, fraction)
    return float(pop.values[:m].sum() / pop.values.sum())


def population_stats(pop: ZipfPopulation) -> Tuple[float, float]:
    """Mean and population standard deviation over equally likely ranks"""
    return float(pop.values.mean()), float(pop.values.std(ddof=0))


def cdf_points(pop: ZipfPopulation) -> List[Tuple[float, float]]:
    """Cumulative traffic share against the fraction of heaviest users"""
    cumulative = np.cumsum(pop.values) / pop.values.sum()
    cumulative[-1] = 1.0
    fractions = np.arange(1, pop.size + 1) / pop.size
    return [(float(f), float(c)) for f, c in zip(fractions, cumulative)]


def compare_profiles(size: int, alphas: Iterable[float], mean_target: float,
                     fractions: Iterable[float]) -> List[dict]:
    """Top-fraction shares for several shape parameters"""
    fractions = list(fractions)
    rows = []
    for alpha in alphas:
        pop = build_population(size, alpha, mean_target)
        for fraction in fractions:
            rows.append({"alpha": alpha, "fraction": fraction, "share": share_of_top(pop, fraction)})
    return rows
