"""
Household traffic forecast: GB/month to Mb/s conversion and compound growth projection
"""

import math
from typing import Iterable, List

from domain.models import ForecastParams, TrafficDemand
from utils.constants import BITS_PER_BYTE, BITS_PER_MBIT, BYTES_PER_GB, SECONDS_PER_MONTH


def gb_month_to_mbps(consumption: float) -> float:
    """Convert a monthly volume in GB to an average rate in Mb/s"""
    if consumption < 0:
        raise ValueError(f"consumption must be >= 0, got {consumption}")
    return consumption * BYTES_PER_GB * BITS_PER_BYTE / SECONDS_PER_MONTH / BITS_PER_MBIT


def growth_factor(params: ForecastParams, year: int) -> float:
    """Compound growth multiplier from the base year to year"""
    if year < params.base_year:
        raise ValueError(f"year {year} is before base year {params.base_year}")
    return (1 + params.cagr) ** (year - params.base_year)


def project_demand(params: ForecastParams, year: int) -> TrafficDemand:
    """Project average and peak per-household demand for a year"""
    avg = gb_month_to_mbps(params.base_consumption) * growth_factor(params, year)
    return TrafficDemand(
        year=year,
        avg_mbps=avg,
        peak_mbps=params.peak_factor * avg,
        peak_factor=params.peak_factor,
    )


def demand_table(params: ForecastParams, years: Iterable[int],
                 peak_factors: Iterable[float]) -> List[TrafficDemand]:
    """One projected demand row per (year, peak factor)"""
    years = list(years)
    if not years:
        raise ValueError("at least one year is required")

    rows = []
    for year in years:
        for factor in peak_factors:
            rows.append(project_demand(
                ForecastParams(params.base_year, params.base_consumption, params.cagr, factor), year
            ))
    return rows


def years_until(params: ForecastParams, factor: float) -> int:
    """Smallest number of years after which demand has grown by at least factor"""
    if factor <= 1:
        return 0
    if params.cagr <= 0:
        raise ValueError(f"demand never grows by {factor:g}x with cagr {params.cagr:g}")

    years = math.ceil(math.log(factor) / math.log1p(params.cagr))
    # Guard the float log ratio landing on the wrong side of an integer
    while (1 + params.cagr) ** years < factor:
        years += 1
    while years > 0 and (1 + params.cagr) ** (years - 1) >= factor:
        years -= 1
    return years
