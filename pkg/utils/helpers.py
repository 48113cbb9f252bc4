"""
Helper utilities for the PON capacity planner
"""

import math
from typing import Iterable

from utils.constants import DISPLAY_SIGNIFICANT_FIGURES, MIN_STANDARD_SPLIT


class ValidationHelper:
    """Helper functions for input validation"""

    @staticmethod
    def is_power_of_two(value: int) -> bool:
        """Check if value is a positive power of two"""
        return isinstance(value, int) and value > 0 and (value & (value - 1)) == 0

    @staticmethod
    def validate_standard_split(split: int) -> bool:
        """Validate a standard's maximum split ratio"""
        return ValidationHelper.is_power_of_two(split) and split >= MIN_STANDARD_SPLIT

    @staticmethod
    def validate_probability(p: float) -> bool:
        """Validate a level strictly inside (0, 1)"""
        return 0.0 < p < 1.0

    @staticmethod
    def validate_split_ladder(splits: Iterable[int]) -> bool:
        """Validate strictly increasing powers of two"""
        splits = list(splits)
        if not splits or not all(ValidationHelper.is_power_of_two(s) for s in splits):
            return False
        return all(a < b for a, b in zip(splits, splits[1:]))

    @staticmethod
    def require(condition: bool, message: str):
        """Raise ValueError with message unless condition holds"""
        if not condition:
            raise ValueError(message)


class FormatHelper:
    """Helper functions for display formatting"""

    @staticmethod
    def significant(value: float, figures: int = DISPLAY_SIGNIFICANT_FIGURES) -> str:
        """Format value to a number of significant figures, keeping trailing zeros"""
        if value is None:
            return "-"
        if value == 0 or not math.isfinite(value):
            return f"{value:g}"

        decimals = figures - 1 - math.floor(math.log10(abs(value)))
        rounded = round(value, decimals)
        # Rounding may carry into a new leading digit (9.996 -> 10.0)
        if rounded != 0:
            decimals = figures - 1 - math.floor(math.log10(abs(rounded)))
            rounded = round(value, decimals)

        if decimals > 0:
            return f"{rounded:.{decimals}f}"
        return f"{int(round(rounded))}"

    @staticmethod
    def percentile_label(p: float) -> str:
        """Column label for a percentile level, e.g. 0.99 -> p99"""
        return f"p{p * 100:g}"

    @staticmethod
    def split_label(split: int) -> str:
        """Display label for a split ratio"""
        return f"1:{split}" if split else "none"
