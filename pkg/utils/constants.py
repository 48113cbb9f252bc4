"""
Constants for the PON capacity planner
"""

# Unit conversion
BYTES_PER_GB = 1e9
BITS_PER_BYTE = 8
BITS_PER_MBIT = 1e6
# Month length fixed at 365/12 days
SECONDS_PER_MONTH = 365 / 12 * 86400

# Forecast defaults
DEFAULT_BASE_YEAR = 2016
DEFAULT_BASE_CONSUMPTION_GB = 77.66
DEFAULT_CAGR = 0.25
DEFAULT_PEAK_FACTOR = 5.0
DEFAULT_FORECAST_YEARS = [2016, 2020, 2025, 2030, 2035]
DEFAULT_PEAK_FACTORS = [3.0, 5.0]

# Zipf population defaults
DEFAULT_POPULATION_SIZE = 100
DEFAULT_ALPHA = 1.0
DEFAULT_SHARE_FRACTIONS = [0.03, 0.10]

# Monte Carlo defaults
DEFAULT_PERCENTILES = [0.50, 0.90, 0.99]
DEFAULT_CONFIDENCE = 0.95
TRIAL_BLOCK_SIZE = 4096
BOOTSTRAP_BATCH_SIZE = 25
TUKEY_WHISKER_IQR = 1.5

# Random stream identifiers (first spawn_key element)
TRIAL_STREAM = 0
BOOTSTRAP_STREAM = 1

# Planning defaults
DEFAULT_HEADROOM = 0.75
DEFAULT_DECISION_PERCENTILE = 0.99
DEFAULT_SPLIT_OPTIONS = [4, 8, 16, 32, 64, 128, 256, 512, 1024]
DEFAULT_HORIZON_YEAR = 2035
MIN_STANDARD_SPLIT = 4

# Output
SCHEMA_VERSION = 1
DISPLAY_SIGNIFICANT_FIGURES = 3
SVG_WIDTH_PX = 800
SVG_HEIGHT_PX = 500
SVG_HASH_SALT = "ponplan"

# Catalog CSV
CATALOG_HEADER = ["name", "upstream_mbps", "downstream_mbps", "max_split", "ratified"]
CATALOG_COMMENT_PREFIX = "#"

# Frozen CSV headers (schema_version 1)
FORECAST_COLUMNS = ["schema_version", "year", "peak_factor", "avg_mbps", "peak_mbps"]
ZIPF_COLUMNS = ["schema_version", "alpha", "fraction", "cumulative_share"]
SIMULATE_LEADING_COLUMNS = ["schema_version", "year", "split", "peak_mbps", "trials", "mean_mbps", "std_mbps"]
SIMULATE_BOXPLOT_COLUMNS = ["whisker_low", "q1", "median", "q3", "whisker_high"]
FEASIBILITY_COLUMNS = [
    "schema_version", "technology", "year", "split", "percentile",
    "statistic_mbps", "limit_mbps", "margin_mbps", "feasible",
]
MAX_SPLIT_COLUMNS = ["schema_version", "technology", "year", "max_split"]
UPGRADE_YEAR_COLUMNS = ["schema_version", "technology", "split", "upgrade_year"]

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Error messages for logging
LOG_MESSAGES = {
    "command_module_failed": "Failed to load command module {module}: {error}",
    "command_error": "Command error in {command}: {error}",
    "catalog_loaded": "Loaded {count} technologies from {source}",
    "catalog_override": "Catalog entry {name} overrides the builtin definition",
    "scenario_start": "Simulating year {year}, split 1:{split}, {trials} trials",
    "scenario_done": "Finished year {year}, split 1:{split} in {elapsed:.2f}s",
    "cache_hit": "Reusing base-year trial set for split 1:{split}",
}

# Notes reported alongside builtin technologies
NG_PON2_NOTE = (
    "NG-PON2 upstream modeled at 40 Gb/s (4 x 10G); "
    "a 4 x 2.5G upstream configuration gives 10 Gb/s, override with a catalog file"
)
