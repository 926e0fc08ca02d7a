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
"""JSON report generator for verification results."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from checks.engine import CheckEngineResult
from config.schema import ExperimentConfig
from reporting.metadata import extract_report_metadata

logger = logging.getLogger(__name__)

REPORT_VERSION = "1.0"
ERRATUM_TAG = "erratum"


def _json_default(value: Any) -> Any:
    # numpy scalars and arrays
    if hasattr(value, "tolist"):
        return value.tolist()
    return str(value)


def build_report(check_results: CheckEngineResult, config: ExperimentConfig) -> Dict[str, Any]:
    """
    Assemble the verify report.

    Args:
        check_results: Results from check engine evaluation
        config: Experiment configuration

    Returns:
        Report dictionary; the errata section is present even when empty
    """
    return {
        "version": REPORT_VERSION,
        "metadata": extract_report_metadata(config),
        "summary": {
            "total_checks": check_results.total_checks,
            "passed_checks": check_results.passed_checks,
            "failed_checks": check_results.failed_checks,
            "skipped_checks": check_results.skipped_checks,
            "error_count": check_results.error_count,
            "warning_count": check_results.warning_count,
            "failed_ids": sorted(check_results.failed_ids()),
        },
        "checks": _format_checks(check_results),
        "errata": _format_errata(check_results),
    }


def generate_json_report(
    check_results: CheckEngineResult,
    config: ExperimentConfig,
    output_path: Path,
) -> None:
    """
    Generate JSON verify report.

    Args:
        check_results: Results from check engine evaluation
        config: Experiment configuration
        output_path: Path to write JSON report
    """
    logger.info(f"Generating JSON report: {output_path}")
    report = build_report(check_results, config)

    # Deterministic ordering
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open("w", encoding="utf-8", newline="\n") as f:
        json.dump(report, f, indent=2, sort_keys=True, ensure_ascii=False, default=_json_default)
        f.write("\n")

    logger.info(f"JSON report written to: {output_path}")


def _format_checks(check_results: CheckEngineResult) -> List[Dict[str, Any]]:
    """
    Format check results for JSON report.

    Returns:
        List of check dictionaries, sorted by check_id
    """
    checks = []
    for result in check_results.results:
        entry = result.to_dict()
        entry["tags"] = sorted(result.check_tags)
        checks.append(entry)
    checks.sort(key=lambda c: c["check_id"])
    return checks


def _format_errata(check_results: CheckEngineResult) -> Dict[str, Any]:
    """Evidence of the erratum checks, keyed by check id."""
    return {
        result.check_id: {"status": result.status.value, "evidence": result.evidence}
        for result in check_results.results
        if ERRATUM_TAG in result.check_tags
    }
