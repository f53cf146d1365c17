"""
Report writers: CSV or markdown tables plus the produced PGM images.

Every value is formatted with a fixed precision and rows keep plan order, so
two runs of the same configuration produce byte-identical trees.
"""

from __future__ import annotations

import csv
import io
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from analyzers.ranking import assign_ranks
from analyzers.timing import categorize_time
from bench.pipelines import PRIMARY_METRICS
from bench.runner import BenchResult, ordered_metrics
from errors import BenchIOError
from imaging.pgm import save_pgm
from models import ExperimentOutcome

logger = logging.getLogger("entrosense.bench.reports")

EXTENSIONS: Dict[str, str] = {"csv": "csv", "markdown": "md"}
ROW_COLUMNS = ("experiment", "family", "order", "sweep", "metric", "value", "wall_time", "time_category")


@dataclass
class ReportTable:
    name: str
    headers: List[str]
    rows: List[List[str]]


def format_value(value: Optional[float], digits: int = 6) -> str:
    if value is None:
        return ""
    return f"{value:.{digits}f}"


def format_order(order: float) -> str:
    return f"{order:g}"


def _time_cells(outcome: ExperimentOutcome, timings: bool) -> List[str]:
    if not timings:
        return ["", ""]
    return [format_value(outcome.wall_time, 3), categorize_time(outcome.wall_time).value]


def rows_table(result: BenchResult) -> ReportTable:
    rows = [
        [
            row.experiment,
            row.family,
            format_order(row.order),
            row.sweep,
            row.metric,
            format_value(row.value),
            format_value(row.wall_time, 3),
            row.time_category.value if row.time_category else "",
        ]
        for row in result.rows
    ]
    return ReportTable("rows", list(ROW_COLUMNS), rows)


def experiment_table(result: BenchResult, experiment: str) -> ReportTable:
    """One row per family x sweep point, one column per metric."""
    outcomes = result.outcomes_for(experiment)
    metrics = ordered_metrics(outcomes[0]) if outcomes else [PRIMARY_METRICS[experiment]]
    headers = ["family", "order", "sweep", *metrics, "wall_time", "time_category"]
    rows = [
        [
            outcome.spec.family.value,
            format_order(outcome.spec.order),
            outcome.sweep,
            *(format_value(outcome.metrics.get(metric)) for metric in metrics),
            *_time_cells(outcome, result.config.timings),
        ]
        for outcome in outcomes
    ]
    return ReportTable(experiment, headers, rows)


def summary_table(result: BenchResult, experiment: str) -> ReportTable:
    """Outcomes ranked by the experiment's primary metric (1 = best)."""
    primary = PRIMARY_METRICS[experiment]
    ranked = [{"outcome": outcome, "rank": 0} for outcome in result.outcomes_for(experiment)]
    assign_ranks(
        ranked,
        get_score=lambda item: item["outcome"].metrics[primary],
        set_rank=lambda item, rank: item.__setitem__("rank", rank),
    )
    ranked.sort(key=lambda item: item["rank"])
    rows = [
        [
            str(item["rank"]),
            item["outcome"].spec.family.value,
            format_order(item["outcome"].spec.order),
            item["outcome"].sweep,
            format_value(item["outcome"].metrics[primary]),
        ]
        for item in ranked
    ]
    return ReportTable(f"{experiment}_summary", ["rank", "family", "order", "sweep", primary], rows)


def ranking_table(result: BenchResult) -> ReportTable:
    headers = ["experiment", "metric", "observed", "reference", "agreement"]
    rows = []
    for comparison in result.comparisons:
        record = comparison.to_dict()
        rows.append([str(record[key]) for key in headers])
    return ReportTable("ranking", headers, rows)


def build_tables(result: BenchResult) -> List[ReportTable]:
    tables = [rows_table(result)]
    for experiment in result.config.experiments:
        tables.append(experiment_table(result, experiment))
        tables.append(summary_table(result, experiment))
    tables.append(ranking_table(result))
    return tables


def render_csv(table: ReportTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.headers)
    writer.writerows(table.rows)
    return buffer.getvalue()


def _markdown_line(cells: Sequence[str]) -> str:
    return "| " + " | ".join(cell.replace("|", "\\|") for cell in cells) + " |\n"


def render_markdown(table: ReportTable) -> str:
    lines = [f"## {table.name}\n", "\n", _markdown_line(table.headers)]
    lines.append("|" + "|".join("---" for _ in table.headers) + "|\n")
    lines.extend(_markdown_line(row) for row in table.rows)
    return "".join(lines)


def render(table: ReportTable, fmt: str) -> str:
    return render_csv(table) if fmt == "csv" else render_markdown(table)


def image_stem(outcome: ExperimentOutcome, name: str) -> str:
    """File-system-safe stem such as ``renyi-2_bins-64_registered``."""
    raw = f"{outcome.spec.label}_{outcome.sweep}_{name}"
    return re.sub(r"[^A-Za-z0-9_.-]+", "-", raw)


def write_reports(result: BenchResult, out_dir: Path, fmt: str = "csv") -> List[Path]:
    out_dir = Path(out_dir)
    extension = EXTENSIONS[fmt]
    written: List[Path] = []
    try:
        reports_dir = out_dir / "reports"
        reports_dir.mkdir(parents=True, exist_ok=True)
        for table in build_tables(result):
            target = reports_dir / f"{table.name}.{extension}"
            target.write_text(render(table, fmt), encoding="utf-8", newline="")
            written.append(target)
        for outcome in result.outcomes:
            for name, image in sorted(outcome.images.items()):
                target = out_dir / "images" / outcome.experiment / f"{image_stem(outcome, name)}.pgm"
                written.append(save_pgm(target, image))
    except OSError as exc:
        raise BenchIOError(f"cannot write reports to {out_dir}: {exc}") from exc

    logger.info("Wrote %d report files under %s", len(written), out_dir)
    return written
