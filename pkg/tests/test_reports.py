"""Tests for report rendering in utils/reports.py."""
import json

import pytest

from domain.models import FeasibilityVerdict, OutputFormat
from utils.reports import ReportBuilder

COLUMNS = ["schema_version", "technology", "split", "upgrade_year"]
ROWS = [
    {"schema_version": 1, "technology": "GPON", "split": 64, "upgrade_year": 2025},
    {"schema_version": 1, "technology": "NG-PON2", "split": 64, "upgrade_year": None},
]


class TestRender:

    def test_csv_keeps_integers_and_blanks(self):
        text = ReportBuilder.render(ROWS, COLUMNS, OutputFormat.CSV)
        assert text.splitlines() == [
            "schema_version,technology,split,upgrade_year",
            "1,GPON,64,2025",
            "1,NG-PON2,64,",
        ]

    def test_json_uses_null(self):
        rows = json.loads(ReportBuilder.render(ROWS, COLUMNS, OutputFormat.JSON))
        assert rows[1]["upgrade_year"] is None
        assert list(rows[0]) == COLUMNS

    def test_table_hides_schema_version(self):
        text = ReportBuilder.render(ROWS, COLUMNS, OutputFormat.TABLE)
        assert "schema_version" not in text
        assert "none" in text.splitlines()[2]

    def test_table_rounds_measured_columns_only(self):
        rows = [{"value": 1017.34, "raw": 1017.34}]
        text = ReportBuilder.render(rows, ["value", "raw"], OutputFormat.TABLE, measured=["value"])
        assert "1020" in text
        assert "1017.34" in text

    def test_svg_rejected(self):
        with pytest.raises(ValueError):
            ReportBuilder.render(ROWS, COLUMNS, OutputFormat.SVG)


class TestVerdicts:

    def _verdict(self, feasible):
        return FeasibilityVerdict(feasible=feasible, statistic_mbps=1017.0, limit_mbps=937.5, margin_mbps=-79.5,
                                  technology="GPON", year=2025, split_n=64, percentile=0.99)

    def test_table_words(self):
        text = ReportBuilder.verdicts([self._verdict(False), self._verdict(True)], OutputFormat.TABLE)
        assert "infeasible" in text
        assert "938" in text

    def test_csv_full_precision(self):
        text = ReportBuilder.verdicts([self._verdict(False)], OutputFormat.CSV)
        assert text.splitlines()[1] == "1,GPON,2025,64,0.99,1017.0,937.5,-79.5,False"
