"""
SVG charts for the PON capacity planner
"""

import io
import math
from typing import Dict, List, Sequence

import matplotlib
from matplotlib.figure import Figure

from domain.models import PonTechnology, SimulationSummary, UpgradeSchedule
from utils.constants import SVG_HASH_SALT, SVG_HEIGHT_PX, SVG_WIDTH_PX
from utils.helpers import FormatHelper

# Fixed colors for the common standards, the rest cycle
TECH_COLORS = ["tab:blue", "tab:red", "tab:green", "black", "tab:purple", "tab:orange", "tab:brown"]
TECH_COLOR_BY_NAME = {"GPON": "tab:blue", "XGS-PON": "tab:red", "25G-PON": "tab:green", "NG-PON2": "black"}


def _color(tech_name: str, index: int) -> str:
    return TECH_COLOR_BY_NAME.get(tech_name, TECH_COLORS[index % len(TECH_COLORS)])


def _new_figure():
    # SVG output is 72 units per inch, so this yields an 800x500 viewBox
    fig = Figure(figsize=(SVG_WIDTH_PX / 72, SVG_HEIGHT_PX / 72))
    return fig, fig.add_subplot()


def _to_svg(fig: Figure) -> str:
    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def schedule_levels(schedule: UpgradeSchedule, split_options: Sequence[int]) -> Dict[str, List[float]]:
    """log2 of the maximum split per year; "none" sits one step below the smallest option"""
    none_level = math.log2(min(split_options)) - 1
    return {
        name: [
            math.log2(schedule.max_split(name, year)) if schedule.max_split(name, year) else none_level
            for year in schedule.years
        ]
        for name in schedule.technologies
    }


class PlotBuilder:
    """Utility class for building self-contained SVG charts"""

    @staticmethod
    def boxplots(summaries: List[SimulationSummary], technologies: Sequence[PonTechnology],
                 headroom: float) -> str:
        """One Tukey box per split with capacity and headroom lines per technology"""
        fig, ax = _new_figure()

        stats = []
        for summary in summaries:
            box = summary.boxplot
            stats.append({
                "label": FormatHelper.split_label(summary.split_n),
                "whislo": box.whisker_low, "q1": box.q1, "med": box.median,
                "q3": box.q3, "whishi": box.whisker_high, "fliers": [],
            })
        artists = ax.bxp(stats, showfliers=False)

        for i, summary in enumerate(summaries):
            split = summary.split_n
            artists["boxes"][i].set_gid(f"box-split-{split}")
            artists["medians"][i].set_gid(f"median-split-{split}")
            for end, whisker, cap in zip(("low", "high"), artists["whiskers"][2 * i:2 * i + 2],
                                         artists["caps"][2 * i:2 * i + 2]):
                whisker.set_gid(f"whisker-split-{split}-{end}")
                cap.set_gid(f"cap-split-{split}-{end}")

        for i, tech in enumerate(technologies):
            color = _color(tech.name, i)
            line = ax.axhline(tech.upstream_mbps, color=color, linewidth=1.2,
                              label=f"{tech.name} {tech.upstream_mbps / 1000:g} Gb/s")
            line.set_gid(f"capacity-{tech.name}")
            line = ax.axhline(headroom * tech.upstream_mbps, color=color, linewidth=1.0, linestyle="--",
                              label=f"{tech.name} {headroom:.0%} limit")
            line.set_gid(f"headroom-{tech.name}")

        ax.set_yscale("log")
        ax.set_xlabel("Split ratio")
        ax.set_ylabel("Aggregated offered traffic (Mb/s)")
        if summaries:
            first = summaries[0]
            ax.set_title(f"Aggregated offered traffic per 1:N PON (year {first.year}, "
                         f"{FormatHelper.significant(first.demand.peak_mbps)} Mb/s peak per household)")
        if technologies:
            ax.legend(loc="upper left", fontsize="small")
        ax.grid(True, axis="y", which="major", alpha=0.3)
        return _to_svg(fig)

    @staticmethod
    def schedule(schedule: UpgradeSchedule, split_options: Sequence[int]) -> str:
        """Step chart of maximum split per year, one line per technology"""
        fig, ax = _new_figure()

        levels = schedule_levels(schedule, split_options)
        for i, name in enumerate(schedule.technologies):
            lines = ax.step(schedule.years, levels[name], where="post", color=_color(name, i),
                            linewidth=1.8, label=name)
            lines[0].set_gid(f"schedule-{name}")

        ticks = [math.log2(min(split_options)) - 1] + [math.log2(split) for split in split_options]
        ax.set_yticks(ticks)
        ax.set_yticklabels(["none"] + [FormatHelper.split_label(split) for split in split_options])
        ax.set_xticks(schedule.years)
        ax.set_xlabel("Year")
        ax.set_ylabel("Maximum split ratio")
        ax.set_title("Maximum split ratio per year and technology")
        ax.legend(loc="lower left", fontsize="small")
        ax.grid(True, alpha=0.3)
        return _to_svg(fig)
