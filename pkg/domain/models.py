"""
Domain models for the PON capacity planner
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from domain.errors import MissingPercentileError, UnknownTechnologyError
from utils.constants import (DEFAULT_ALPHA, DEFAULT_BASE_CONSUMPTION_GB, DEFAULT_BASE_YEAR,
                             DEFAULT_CAGR, DEFAULT_CONFIDENCE, DEFAULT_DECISION_PERCENTILE,
                             DEFAULT_HEADROOM, DEFAULT_PEAK_FACTOR, DEFAULT_PERCENTILES,
                             DEFAULT_POPULATION_SIZE, DEFAULT_SPLIT_OPTIONS)
from utils.helpers import ValidationHelper

require = ValidationHelper.require


class OutputFormat(Enum):
    """Report output format"""
    TABLE = "table"
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


@dataclass(frozen=True)
class ForecastParams:
    """Household demand forecast parameters"""
    base_year: int = DEFAULT_BASE_YEAR
    base_consumption: float = DEFAULT_BASE_CONSUMPTION_GB  # GB per month per household
    cagr: float = DEFAULT_CAGR
    peak_factor: float = DEFAULT_PEAK_FACTOR

    def __post_init__(self):
        require(self.base_consumption > 0, f"base consumption must be > 0, got {self.base_consumption}")
        require(self.cagr > -1, f"cagr must be > -1, got {self.cagr}")
        require(self.peak_factor >= 1, f"peak factor must be >= 1, got {self.peak_factor}")


@dataclass(frozen=True)
class TrafficDemand:
    """Per-household offered bandwidth for one year"""
    year: int
    avg_mbps: float
    peak_mbps: float
    peak_factor: float


@dataclass(frozen=True, eq=False)
class ZipfPopulation:
    """Ranked per-user offered bandwidths, v_1 is the heaviest user"""
    size: int
    alpha: float
    mean_target: float
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)


@dataclass(frozen=True)
class ScenarioConfig:
    """Monte Carlo settings for one split ratio"""
    split_n: int
    trials: int = 100_000
    bootstrap_reps: int = 1_000
    confidence: float = DEFAULT_CONFIDENCE
    percentiles: Tuple[float, ...] = tuple(DEFAULT_PERCENTILES)
    seed: int = 0
    workers: int = 1
    population_size: int = DEFAULT_POPULATION_SIZE
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        require(self.split_n >= 1, f"split must be >= 1, got {self.split_n}")
        require(self.trials >= 1, f"trials must be >= 1, got {self.trials}")
        require(self.bootstrap_reps >= 1, f"bootstrap reps must be >= 1, got {self.bootstrap_reps}")
        require(ValidationHelper.validate_probability(self.confidence),
                f"confidence must be in (0, 1), got {self.confidence}")
        require(len(self.percentiles) > 0, "at least one percentile is required")
        for p in self.percentiles:
            require(ValidationHelper.validate_probability(p), f"percentile must be in (0, 1), got {p}")
        require(self.seed >= 0, f"seed must be >= 0, got {self.seed}")
        require(self.workers >= 1, f"workers must be >= 1, got {self.workers}")
        require(self.population_size >= 1, f"population size must be >= 1, got {self.population_size}")
        require(self.alpha >= 0, f"alpha must be >= 0, got {self.alpha}")


@dataclass(frozen=True, eq=False)
class TrialSet:
    """Aggregate offered traffic of every Monte Carlo trial"""
    samples: np.ndarray
    population: ZipfPopulation
    split_n: int
    seed: int

    def __post_init__(self):
        self.samples.setflags(write=False)

    def __len__(self) -> int:
        return len(self.samples)

    def to_csv(self) -> str:
        """Single-column CSV export"""
        return pd.DataFrame({"aggregate_mbps": self.samples}).to_csv(index=False, lineterminator="\n")


@dataclass(frozen=True)
class PercentileEstimate:
    """Percentile point estimate with its bootstrap confidence interval"""
    p: float
    point: float
    ci_low: float
    ci_high: float

    def scaled(self, factor: float) -> "PercentileEstimate":
        return PercentileEstimate(self.p, self.point * factor, self.ci_low * factor, self.ci_high * factor)


@dataclass(frozen=True)
class BoxplotStats:
    """Tukey five-number summary"""
    whisker_low: float
    q1: float
    median: float
    q3: float
    whisker_high: float

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.whisker_low, self.q1, self.median, self.q3, self.whisker_high)

    def scaled(self, factor: float) -> "BoxplotStats":
        return BoxplotStats(*(value * factor for value in self.as_tuple()))


@dataclass(frozen=True)
class SimulationSummary:
    """Percentiles and boxplot of one (year, split) scenario"""
    year: int
    split_n: int
    demand: TrafficDemand
    estimates: Tuple[PercentileEstimate, ...]
    boxplot: BoxplotStats
    trials: int
    mean_mbps: float
    std_mbps: float

    @property
    def percentiles(self) -> List[float]:
        return [estimate.p for estimate in self.estimates]

    def estimate_for(self, p: float) -> PercentileEstimate:
        """Get the estimate for percentile level p"""
        for estimate in self.estimates:
            if abs(estimate.p - p) < 1e-12:
                return estimate
        raise MissingPercentileError(p, self.percentiles)


@dataclass(frozen=True)
class PonTechnology:
    """One PON standard and its capacity limits"""
    name: str
    upstream_mbps: float
    downstream_mbps: float
    max_standard_split: int
    ratified: int
    note: str = ""

    def __post_init__(self):
        require(bool(self.name.strip()), "technology name must not be empty")
        require(self.upstream_mbps > 0, f"{self.name}: upstream capacity must be > 0")
        require(self.downstream_mbps > 0, f"{self.name}: downstream capacity must be > 0")
        require(ValidationHelper.validate_standard_split(self.max_standard_split),
                f"{self.name}: max split must be a power of two >= 4, got {self.max_standard_split}")


@dataclass(frozen=True)
class Catalog:
    """Ordered set of PON technologies with unique names"""
    technologies: Tuple[PonTechnology, ...]

    def __post_init__(self):
        require(len(self.technologies) > 0, "catalog must not be empty")
        seen = set()
        for tech in self.technologies:
            key = tech.name.lower()
            require(key not in seen, f"duplicate technology name '{tech.name}'")
            seen.add(key)

    def __iter__(self) -> Iterator[PonTechnology]:
        return iter(self.technologies)

    def __len__(self) -> int:
        return len(self.technologies)

    def names(self) -> List[str]:
        return [tech.name for tech in self.technologies]

    def get(self, name: str) -> PonTechnology:
        """Look up a technology by case-insensitive name"""
        for tech in self.technologies:
            if tech.name.lower() == name.lower():
                return tech
        raise UnknownTechnologyError(name, self.names())


@dataclass(frozen=True)
class PlanningPolicy:
    """Decision rule for PON feasibility"""
    headroom: float = DEFAULT_HEADROOM
    decision_percentile: float = DEFAULT_DECISION_PERCENTILE
    use_ci_upper: bool = False
    split_options: Tuple[int, ...] = tuple(DEFAULT_SPLIT_OPTIONS)
    enforce_standard_split: bool = True

    def __post_init__(self):
        require(0 < self.headroom <= 1, f"headroom must be in (0, 1], got {self.headroom}")
        require(ValidationHelper.validate_probability(self.decision_percentile),
                f"decision percentile must be in (0, 1), got {self.decision_percentile}")
        require(ValidationHelper.validate_split_ladder(self.split_options),
                f"split options must be strictly increasing powers of two, got {list(self.split_options)}")

    def limit_for(self, tech: PonTechnology) -> float:
        """Usable upstream capacity of a technology"""
        return self.headroom * tech.upstream_mbps

    def candidate_splits(self, tech: PonTechnology) -> List[int]:
        """Split options allowed for a technology"""
        if not self.enforce_standard_split:
            return list(self.split_options)
        return [s for s in self.split_options if s <= tech.max_standard_split]


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of the percentile-versus-headroom rule"""
    feasible: bool
    statistic_mbps: float
    limit_mbps: float
    margin_mbps: float
    technology: str = ""
    year: Optional[int] = None
    split_n: Optional[int] = None
    percentile: Optional[float] = None


@dataclass
class UpgradeSchedule:
    """Maximum feasible split per technology and year, with first infeasible years"""
    years: List[int]
    technologies: List[str]
    max_splits: Dict[str, Dict[int, int]] = field(default_factory=dict)
    upgrade_years: Dict[Tuple[str, int], Optional[int]] = field(default_factory=dict)

    def max_split(self, technology: str, year: int) -> int:
        return self.max_splits[technology][year]

    def upgrade_year(self, technology: str, split: int) -> Optional[int]:
        return self.upgrade_years[(technology, split)]

    def to_matrix_rows(self) -> List[Dict]:
        """Rows = technologies, columns = years, cells = max split"""
        rows = []
        for name in self.technologies:
            row = {"technology": name}
            row.update({str(year): self.max_splits[name][year] for year in self.years})
            rows.append(row)
        return rows

    def to_upgrade_rows(self) -> List[Dict]:
        """One row per (technology, split) with its first infeasible year"""
        return [
            {"technology": name, "split": split, "upgrade_year": year}
            for (name, split), year in self.upgrade_years.items()
        ]
