# Copyright 2025 John Brosnihan
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Verify command implementation."""

import argparse
import logging
from pathlib import Path
from typing import Optional

from checks.engine import CheckEngine, CheckEngineResult
from checks.registry import ALL_CHECKS
from cli.commands.common import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, load_experiment
from config.schema import ExperimentConfig
from reporting import generate_json_report, generate_markdown_report

logger = logging.getLogger(__name__)

REPORT_STEM = "verify_report"


def run_checks(config: ExperimentConfig) -> CheckEngineResult:
    """Evaluate every registered check against the configuration."""
    logger.info("Running verification checks")
    logger.debug(f"Checks to include: {config.checks.include}")
    logger.debug(f"Checks to exclude: {config.checks.exclude}")
    logger.debug(f"Severity overrides: {config.checks.severity_overrides}")

    engine = CheckEngine(config)
    engine.register_checks(ALL_CHECKS)
    return engine.evaluate_all()


def write_verify_report(config: ExperimentConfig, json_path: Optional[Path] = None) -> bool:
    """
    Run the checks and write the JSON and Markdown reports.

    Args:
        config: Experiment configuration
        json_path: JSON report path; the Markdown report goes next to it.
            Defaults to verify_report.json under the output directory.

    Returns:
        True when no check failed
    """
    results = run_checks(config)
    if json_path is None:
        json_path = Path(config.outdir) / f"{REPORT_STEM}.json"
    md_path = json_path.with_suffix(".md")

    generate_json_report(results, config, json_path)
    generate_markdown_report(results, config, md_path)

    logger.info("=" * 60)
    logger.info("VERIFICATION SUMMARY")
    logger.info("=" * 60)
    logger.info(f"Total checks evaluated: {results.total_checks}")
    logger.info(f"  Passed: {results.passed_checks}")
    logger.info(f"  Failed: {results.failed_checks}")
    logger.info(f"    Errors: {results.error_count}")
    logger.info(f"    Warnings: {results.warning_count}")
    logger.info(f"  Skipped: {results.skipped_checks}")
    logger.info("=" * 60)
    logger.info("Reports generated:")
    logger.info(f"  JSON: {json_path}")
    logger.info(f"  Markdown: {md_path}")

    if results.has_failures():
        logger.error(f"Verification failed: {', '.join(sorted(results.failed_ids()))}")
        return False
    logger.info("Verification completed successfully")
    return True


def verify_command(args: argparse.Namespace) -> int:
    """
    Execute the verify command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 all checks pass or skip, 1 any check failed, 2 bad config)
    """
    config = load_experiment(args)
    if config is None:
        return EXIT_USAGE

    json_path = Path(config.out) if config.out else None
    try:
        ok = write_verify_report(config, json_path)
    except OSError as e:
        logger.error(f"Failed to write reports (I/O error): {e}")
        return EXIT_CHECK_FAILED
    return EXIT_OK if ok else EXIT_CHECK_FAILED
