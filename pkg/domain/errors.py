"""
Exceptions raised by the PON capacity planner
"""

from typing import List, Optional


class CatalogParseError(ValueError):
    """Catalog file content that fails parsing or validation"""

    def __init__(self, message: str, line: int, column: Optional[str] = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column '{column}'"
        super().__init__(f"{where}: {message}")


class UnknownTechnologyError(KeyError):
    """Technology name absent from the active catalog"""

    def __init__(self, name: str, available: List[str]):
        self.name = name
        self.available = list(available)
        super().__init__(name)

    def __str__(self):
        return f"unknown technology '{self.name}' (available: {', '.join(self.available)})"


class MissingPercentileError(KeyError):
    """Decision percentile not estimated in a simulation summary"""

    def __init__(self, p: float, available: List[float]):
        self.p = p
        self.available = list(available)
        super().__init__(p)

    def __str__(self):
        levels = ", ".join(f"{level:g}" for level in self.available)
        return f"percentile {self.p:g} not in summary (estimated: {levels})"
