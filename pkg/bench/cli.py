"""
Command-line entry point: ``bench run`` and ``bench gen-fixtures``.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from app_meta import describe_runtime
from bench.fixtures import gen_fixtures
from bench.reports import ReportTable, build_tables, write_reports
from bench.runner import BenchResult, run_benchmark
from bench.schemas import ExperimentConfig, build_experiment_config
from config import EXIT_CONFIG_ERROR, EXIT_IO_ERROR, EXIT_OK, EXIT_PIPELINE_ERROR
from errors import BenchIOError, ConfigError, PipelineError
from infrastructure.config_file import load_config_file
from logger import setup_logger

logger = logging.getLogger("entrosense.bench")

console = Console()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Compare Shannon, Renyi and Tsallis entropies on thresholding, "
        "registration and clustering benchmarks.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  bench run --config bench.conf
  bench run --experiment register --families shannon,renyi:2,tsallis:2 --seed 7
  bench gen-fixtures --config bench.conf --out fixtures_out
        """,
    )
    parser.add_argument("--version", action="version", version=describe_runtime())
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="Run experiments and write reports")
    _add_common_arguments(run)
    run.add_argument("--experiment", choices=["threshold", "register", "cluster", "all"])
    run.add_argument("--families", help="Comma-separated list, e.g. shannon,renyi:2,tsallis:0.5")
    run.add_argument("--jobs", type=int, help="Concurrent pipeline tasks (1 for reference timings)")
    run.add_argument("--format", choices=["csv", "markdown"])
    run.add_argument(
        "--timings",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Write wall times and time categories into the reports",
    )

    fixtures = subparsers.add_parser("gen-fixtures", help="Write seeded fixtures to <out>/fixtures")
    _add_common_arguments(fixtures)
    return parser


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="key = value or YAML experiment config")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", help="Output directory")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on the console")


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("experiment", "families", "seed", "jobs", "out", "format", "timings")
    return {key: getattr(args, key, None) for key in keys}


def load_experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    file_values = load_config_file(args.config) if args.config else {}
    return build_experiment_config(file_values, _overrides(args))


def _rich_table(table: ReportTable) -> Table:
    rendered = Table(title=table.name)
    for header in table.headers:
        rendered.add_column(header)
    for row in table.rows:
        rendered.add_row(*row)
    return rendered


def print_summary(result: BenchResult) -> None:
    for table in build_tables(result):
        if table.name.endswith("_summary") or table.name == "ranking":
            console.print(_rich_table(table))


def cmd_run(config: ExperimentConfig) -> int:
    result = run_benchmark(config)
    write_reports(result, Path(config.out), config.format)
    print_summary(result)
    return EXIT_OK


def cmd_gen_fixtures(config: ExperimentConfig) -> int:
    manifest = gen_fixtures(config, Path(config.out) / "fixtures")
    console.print(f"Wrote {len(manifest)} fixtures to {Path(config.out) / 'fixtures'}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(list(argv) if argv is not None else None)
    root_logger = setup_logger("entrosense")
    if args.verbose:
        root_logger.setLevel(logging.DEBUG)

    try:
        config = load_experiment_config(args)
        if args.command == "gen-fixtures":
            return cmd_gen_fixtures(config)
        return cmd_run(config)
    except ConfigError as exc:
        logger.error("Configuration error: %s", exc)
        return EXIT_CONFIG_ERROR
    except PipelineError as exc:
        logger.error("Pipeline error in stage '%s': %s", exc.stage, exc.cause)
        return EXIT_PIPELINE_ERROR
    except (BenchIOError, OSError) as exc:
        logger.error("I/O error: %s", exc)
        return EXIT_IO_ERROR
