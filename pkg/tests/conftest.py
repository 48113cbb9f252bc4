"""Shared fixtures for the planner test suite."""
import pytest

from domain.models import ForecastParams, PlanningPolicy, ScenarioConfig
from domain.tech_catalog import builtin_catalog
from engine.forecast import project_demand
from engine.planner import CapacityPlanner
from engine.zipf_model import build_population

ACCEPTANCE_SEED = 1


@pytest.fixture
def params():
    return ForecastParams()


@pytest.fixture
def catalog():
    return builtin_catalog()


@pytest.fixture
def base_peak(params):
    """Unrounded base-year peak demand, 5 x 0.23641 Mb/s"""
    return project_demand(params, params.base_year).peak_mbps


@pytest.fixture
def calibration_population(base_peak):
    return build_population(100, 1.0, base_peak)


@pytest.fixture
def small_config():
    return ScenarioConfig(split_n=8, trials=5_000, bootstrap_reps=50, seed=7)


@pytest.fixture(scope="module")
def acceptance_planner():
    """Planner at the full trial count; point estimates do not depend on the resample count"""
    config = ScenarioConfig(split_n=4, trials=100_000, bootstrap_reps=100,
                            percentiles=(0.5, 0.9, 0.99), seed=ACCEPTANCE_SEED, workers=4)
    return CapacityPlanner(ForecastParams(), PlanningPolicy(), config)


@pytest.fixture(scope="module")
def uncapped_planner():
    config = ScenarioConfig(split_n=4, trials=100_000, bootstrap_reps=100,
                            percentiles=(0.99,), seed=ACCEPTANCE_SEED, workers=4)
    return CapacityPlanner(ForecastParams(), PlanningPolicy(enforce_standard_split=False), config)
