"""
Configuration settings for the PON capacity planner
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _optional(name):
    value = os.getenv(name)
    return value if value else None


ENV_NAMES = {
    "SEED": "PONPLAN_SEED",
    "TRIALS": "PONPLAN_TRIALS",
    "BOOTSTRAP_REPS": "PONPLAN_BOOTSTRAP_REPS",
    "WORKERS": "PONPLAN_WORKERS",
    "CATALOG_FILE": "PONPLAN_CATALOG",
    "LOG_LEVEL": "PONPLAN_LOG_LEVEL",
    "LOG_FILE": "PONPLAN_LOG_FILE",
}


class Config:
    """Configuration class for planner settings"""

    # Simulation Settings
    SEED = os.getenv("PONPLAN_SEED", "20170101")
    TRIALS = os.getenv("PONPLAN_TRIALS", "100000")
    BOOTSTRAP_REPS = os.getenv("PONPLAN_BOOTSTRAP_REPS", "1000")
    WORKERS = os.getenv("PONPLAN_WORKERS", "4")

    # Catalog Settings
    CATALOG_FILE = _optional("PONPLAN_CATALOG")

    # Logging Settings
    LOG_LEVEL = os.getenv("PONPLAN_LOG_LEVEL", "WARNING").upper()
    LOG_FILE = _optional("PONPLAN_LOG_FILE")

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        invalid = []

        for var, minimum in (("SEED", 0), ("TRIALS", 1), ("BOOTSTRAP_REPS", 1), ("WORKERS", 1)):
            try:
                if int(getattr(cls, var)) < minimum:
                    invalid.append(var)
            except (TypeError, ValueError):
                invalid.append(var)

        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            invalid.append("LOG_LEVEL")

        if cls.CATALOG_FILE and not os.path.isfile(cls.CATALOG_FILE):
            invalid.append("CATALOG_FILE")

        if cls.LOG_FILE and not os.path.isdir(os.path.dirname(os.path.abspath(cls.LOG_FILE))):
            invalid.append("LOG_FILE")

        if invalid:
            names = [ENV_NAMES[var] for var in invalid]
            raise ValueError(f"Invalid environment variables: {', '.join(names)}")

        return True

    @classmethod
    def default_seed(cls) -> int:
        """Get the default reproducibility seed"""
        return int(cls.SEED)

    @classmethod
    def default_trials(cls) -> int:
        """Get the default Monte Carlo trial count"""
        return int(cls.TRIALS)

    @classmethod
    def default_bootstrap_reps(cls) -> int:
        """Get the default bootstrap resample count"""
        return int(cls.BOOTSTRAP_REPS)

    @classmethod
    def default_workers(cls) -> int:
        """Get the Monte Carlo thread count"""
        return int(cls.WORKERS)
