"""
Report utilities for the PON capacity planner

Every report is a list of rows rendered in one of three layouts: a table
rounded to three significant figures, or csv/json at full precision. JSON
field names are the CSV headers.
"""

import json
from typing import Dict, Iterable, List, Sequence

import pandas as pd

from domain.models import (Catalog, FeasibilityVerdict, OutputFormat, SimulationSummary,
                           TrafficDemand, UpgradeSchedule)
from utils.constants import (CATALOG_HEADER, FEASIBILITY_COLUMNS, FORECAST_COLUMNS, MAX_SPLIT_COLUMNS,
                             SCHEMA_VERSION, SIMULATE_BOXPLOT_COLUMNS, SIMULATE_LEADING_COLUMNS,
                             UPGRADE_YEAR_COLUMNS, ZIPF_COLUMNS)
from utils.helpers import FormatHelper


class ReportBuilder:
    """Utility class for building rendered reports"""

    @staticmethod
    def render(rows: List[Dict], columns: Sequence[str], fmt: OutputFormat,
               measured: Iterable[str] = ()) -> str:
        """Render rows in the requested layout"""
        columns = list(columns)
        rows = [{column: row.get(column) for column in columns} for row in rows]

        if fmt == OutputFormat.JSON:
            return json.dumps(rows, indent=2) + "\n"

        if fmt == OutputFormat.CSV:
            return pd.DataFrame(rows, columns=columns, dtype=object).to_csv(index=False, lineterminator="\n")

        if fmt == OutputFormat.TABLE:
            measured = set(measured)
            shown = [column for column in columns if column != "schema_version"]
            display = [
                {
                    column: FormatHelper.significant(row[column]) if column in measured
                    else ("none" if row[column] is None else row[column])
                    for column in shown
                }
                for row in rows
            ]
            return pd.DataFrame(display, columns=shown, dtype=object).to_string(index=False) + "\n"

        raise ValueError(f"format '{fmt.value}' is not available for this report")

    @staticmethod
    def forecast(demands: List[TrafficDemand], fmt: OutputFormat) -> str:
        """Demand table report"""
        rows = [
            {"schema_version": SCHEMA_VERSION, "year": d.year, "peak_factor": d.peak_factor,
             "avg_mbps": d.avg_mbps, "peak_mbps": d.peak_mbps}
            for d in demands
        ]
        return ReportBuilder.render(rows, FORECAST_COLUMNS, fmt, measured=["avg_mbps", "peak_mbps"])

    @staticmethod
    def zipf_cdf(curves: Dict[float, List[tuple]], fmt: OutputFormat) -> str:
        """Cumulative traffic share curves, one per alpha"""
        rows = [
            {"schema_version": SCHEMA_VERSION, "alpha": alpha, "fraction": fraction, "cumulative_share": share}
            for alpha, points in curves.items()
            for fraction, share in points
        ]
        return ReportBuilder.render(rows, ZIPF_COLUMNS, fmt, measured=["cumulative_share"])

    @staticmethod
    def zipf_shares(rows: List[Dict], fmt: OutputFormat) -> str:
        """Top-fraction traffic shares"""
        rows = [{"schema_version": SCHEMA_VERSION, **row} for row in rows]
        return ReportBuilder.render(rows, ["schema_version", "alpha", "fraction", "share"], fmt,
                                    measured=["share"])

    @staticmethod
    def zipf_stats(rows: List[Dict], fmt: OutputFormat) -> str:
        """Calibration statistics of a population"""
        rows = [{"schema_version": SCHEMA_VERSION, **row} for row in rows]
        columns = ["schema_version", "alpha", "size", "mean_mbps", "std_mbps",
                   "top1_mbps", "top2_mbps", "top3_mbps", "bottom3_mbps", "bottom2_mbps", "bottom1_mbps"]
        return ReportBuilder.render(rows, columns, fmt, measured=columns[3:])

    @staticmethod
    def simulation_columns(percentiles: Sequence[float]) -> List[str]:
        """Frozen simulate header for a set of percentile levels"""
        columns = list(SIMULATE_LEADING_COLUMNS)
        for p in percentiles:
            label = FormatHelper.percentile_label(p)
            columns += [label, f"{label}_lo", f"{label}_hi"]
        return columns + list(SIMULATE_BOXPLOT_COLUMNS)

    @staticmethod
    def simulation_row(summary: SimulationSummary) -> Dict:
        """One summary as a flat row"""
        row = {
            "schema_version": SCHEMA_VERSION,
            "year": summary.year,
            "split": summary.split_n,
            "peak_mbps": summary.demand.peak_mbps,
            "trials": summary.trials,
            "mean_mbps": summary.mean_mbps,
            "std_mbps": summary.std_mbps,
        }
        for estimate in summary.estimates:
            label = FormatHelper.percentile_label(estimate.p)
            row[label] = estimate.point
            row[f"{label}_lo"] = estimate.ci_low
            row[f"{label}_hi"] = estimate.ci_high
        row.update(zip(SIMULATE_BOXPLOT_COLUMNS, summary.boxplot.as_tuple()))
        return row

    @staticmethod
    def simulations(summaries: List[SimulationSummary], fmt: OutputFormat) -> str:
        """Simulation summaries, one row per split"""
        columns = ReportBuilder.simulation_columns(summaries[0].percentiles)
        measured = [c for c in columns if c not in ("schema_version", "year", "split", "trials")]
        rows = [ReportBuilder.simulation_row(summary) for summary in summaries]
        return ReportBuilder.render(rows, columns, fmt, measured=measured)

    @staticmethod
    def verdicts(verdicts: List[FeasibilityVerdict], fmt: OutputFormat) -> str:
        """Feasibility verdicts"""
        rows = [
            {"schema_version": SCHEMA_VERSION, "technology": v.technology, "year": v.year, "split": v.split_n,
             "percentile": v.percentile, "statistic_mbps": v.statistic_mbps, "limit_mbps": v.limit_mbps,
             "margin_mbps": v.margin_mbps, "feasible": v.feasible}
            for v in verdicts
        ]
        if fmt == OutputFormat.TABLE:
            for row in rows:
                row["feasible"] = "feasible" if row["feasible"] else "infeasible"
        return ReportBuilder.render(rows, FEASIBILITY_COLUMNS, fmt,
                                    measured=["statistic_mbps", "limit_mbps", "margin_mbps"])

    @staticmethod
    def max_splits(rows: List[Dict], fmt: OutputFormat) -> str:
        """Maximum split per (technology, year)"""
        rows = [{"schema_version": SCHEMA_VERSION, **row} for row in rows]
        return ReportBuilder.render(rows, MAX_SPLIT_COLUMNS, fmt)

    @staticmethod
    def schedule(schedule: UpgradeSchedule, fmt: OutputFormat) -> str:
        """Max split matrix, technologies by years"""
        columns = ["schema_version", "technology"] + [str(year) for year in schedule.years]
        rows = [{"schema_version": SCHEMA_VERSION, **row} for row in schedule.to_matrix_rows()]
        return ReportBuilder.render(rows, columns, fmt)

    @staticmethod
    def upgrade_years(rows: List[Dict], fmt: OutputFormat) -> str:
        """First infeasible year per (technology, split)"""
        rows = [{"schema_version": SCHEMA_VERSION, **row} for row in rows]
        return ReportBuilder.render(rows, UPGRADE_YEAR_COLUMNS, fmt)

    @staticmethod
    def catalog(catalog: Catalog, fmt: OutputFormat) -> str:
        """Active technology catalog with notes"""
        rows = [
            {"schema_version": SCHEMA_VERSION, "name": t.name, "upstream_mbps": t.upstream_mbps, "downstream_mbps": t.downstream_mbps,
             "max_split": t.max_standard_split, "ratified": t.ratified, "note": t.note}
            for t in catalog
        ]
        return ReportBuilder.render(rows, ["schema_version"] + CATALOG_HEADER + ["note"], fmt)
