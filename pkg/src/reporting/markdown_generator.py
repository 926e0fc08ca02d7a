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
"""Markdown report generator for verification results."""

import logging
from pathlib import Path
from typing import Any, Dict, List

from checks.engine import CheckEngineResult
from checks.result import CheckResult, CheckSeverity, CheckStatus
from config.schema import ExperimentConfig
from reporting.json_generator import ERRATUM_TAG
from reporting.metadata import extract_report_metadata

logger = logging.getLogger(__name__)

# Longer evidence lists are cut; the JSON report keeps them whole
MAX_EVIDENCE_ITEMS = 20


def generate_markdown_report(
    check_results: CheckEngineResult,
    config: ExperimentConfig,
    output_path: Path,
) -> None:
    """
    Generate Markdown verify report.

    Args:
        check_results: Results from check engine evaluation
        config: Experiment configuration
        output_path: Path to write Markdown report
    """
    logger.info(f"Generating Markdown report: {output_path}")
    metadata = extract_report_metadata(config)

    sections = ["# Verification Report\n", "---\n"]
    sections.append(_format_overview(check_results, metadata))

    failures = [r for r in check_results.results if r.status == CheckStatus.FAIL]
    if failures:
        sections.append(_format_failures(failures))

    passed = [r for r in check_results.results if r.status == CheckStatus.PASS]
    if passed:
        sections.append(_format_listing("Passed Checks", "passed", passed))

    skipped = [r for r in check_results.results if r.status == CheckStatus.SKIP]
    if skipped:
        sections.append(_format_listing("Skipped Checks", "were skipped", skipped))

    sections.append(_format_errata(check_results))

    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open("w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(sections))

    logger.info(f"Markdown report written to: {output_path}")


def _format_overview(check_results: CheckEngineResult, metadata: Dict[str, Any]) -> str:
    """Format overview section."""
    lines = ["## Overview\n", "### Summary\n"]
    lines.append(f"- **Total Checks:** {check_results.total_checks}")
    lines.append(f"- **Passed:** {check_results.passed_checks}")
    lines.append(f"- **Failed:** {check_results.failed_checks}")
    lines.append(f"  - Errors: {check_results.error_count}")
    lines.append(f"  - Warnings: {check_results.warning_count}")
    lines.append(f"- **Skipped:** {check_results.skipped_checks}")

    status_text = "FAIL" if check_results.has_failures() else "PASS"
    lines.append(f"\n**Status:** {status_text}\n")

    lines.append("### Metadata\n")
    for key in sorted(metadata):
        lines.append(f"- **{key}:** `{metadata[key]}`")
    lines.append("")
    return "\n".join(lines)


def _format_failures(failures: List[CheckResult]) -> str:
    """Format failures section, errors first."""
    lines = ["## Failures\n"]
    ordered = sorted(
        failures, key=lambda r: (0 if r.severity == CheckSeverity.ERROR else 1, r.check_id)
    )
    for result in ordered:
        lines.append(f"### {result.check_id}\n")
        lines.append(f"**Severity:** {result.severity.value.upper()}\n")
        lines.append(f"**Message:** {result.message}\n")
        if result.evidence:
            lines.append("**Evidence:**\n")
            lines.append(_format_evidence(result.evidence))
        if result.remediation:
            lines.append("**Remediation:**\n")
            lines.append(f"{result.remediation}\n")
        lines.append("---\n")
    return "\n".join(lines)


def _format_listing(title: str, verb: str, results: List[CheckResult]) -> str:
    lines = [f"## {title}\n", f"The following checks {verb}:\n"]
    for result in sorted(results, key=lambda r: r.check_id):
        lines.append(f"- `{result.check_id}`: {result.message}")
    lines.append("")
    return "\n".join(lines)


def _format_errata(check_results: CheckEngineResult) -> str:
    """Divergences between printed expressions and simulation."""
    lines = ["## Errata\n"]
    errata = sorted(
        (r for r in check_results.results if ERRATUM_TAG in r.check_tags),
        key=lambda r: r.check_id,
    )
    if not errata:
        lines.append("No erratum checks were registered.\n")
    for result in errata:
        lines.append(f"### {result.check_id} ({result.status.value})\n")
        lines.append(f"{result.message}\n")
        lines.append(_format_evidence(result.evidence))
    return "\n".join(lines)


def _format_evidence(evidence: Dict[str, Any]) -> str:
    """Format evidence dictionary."""
    lines = []
    for key, value in sorted(evidence.items()):
        if isinstance(value, list):
            if not value:
                lines.append(f"- **{key}:** (empty)")
                continue
            lines.append(f"- **{key}:** ({len(value)} items)")
            for item in value[:MAX_EVIDENCE_ITEMS]:
                lines.append(f"  - `{item}`")
            if len(value) > MAX_EVIDENCE_ITEMS:
                lines.append(f"  - _(... and {len(value) - MAX_EVIDENCE_ITEMS} more)_")
        elif isinstance(value, dict):
            lines.append(f"- **{key}:**")
            for sub_key, sub_value in sorted(value.items()):
                lines.append(f"  - {sub_key}: `{sub_value}`")
        else:
            lines.append(f"- **{key}:** `{value}`")
    lines.append("")
    return "\n".join(lines)
