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
"""Tests for JSON report generator."""

import json

import numpy as np

from checks.engine import CheckEngineResult
from reporting.json_generator import (
    REPORT_VERSION,
    _format_checks,
    _format_errata,
    build_report,
    generate_json_report,
)


class TestFormatChecks:
    """Tests for _format_checks."""

    def test_empty(self):
        """Test formatting no results."""
        assert _format_checks(CheckEngineResult()) == []

    def test_sorted_by_id(self, engine_result):
        """Test checks are sorted by check_id for determinism."""
        checks = _format_checks(engine_result)

        assert [c["check_id"] for c in checks] == [
            "alpha-check",
            "printed-formula",
            "skipped-check",
            "zeta-check",
        ]

    def test_tags_sorted(self, engine_result):
        """Test check tags are sorted."""
        checks = {c["check_id"]: c for c in _format_checks(engine_result)}

        assert checks["zeta-check"]["tags"] == ["dense", "states"]


class TestFormatErrata:
    """Tests for _format_errata."""

    def test_only_erratum_tagged(self, engine_result):
        """Test only erratum-tagged checks appear."""
        errata = _format_errata(engine_result)

        assert list(errata) == ["printed-formula"]
        assert errata["printed-formula"]["status"] == "pass"
        assert errata["printed-formula"]["evidence"]["divergences"][0]["n"] == 15

    def test_empty_section(self):
        """Test the errata section is an empty mapping without erratum checks."""
        assert _format_errata(CheckEngineResult()) == {}


class TestBuildReport:
    """Tests for build_report."""

    def test_structure(self, engine_result, config):
        """Test the report carries version, metadata, summary, checks and errata."""
        report = build_report(engine_result, config)

        assert report["version"] == REPORT_VERSION
        assert set(report) == {"version", "metadata", "summary", "checks", "errata"}
        assert report["summary"]["failed_ids"] == ["alpha-check"]
        assert report["summary"]["total_checks"] == 4
        assert report["metadata"]["length"] == 8
        assert report["metadata"]["seed"] == 5


class TestGenerateJsonReport:
    """Tests for generate_json_report."""

    def test_writes_file(self, engine_result, config, tmp_path):
        """Test the report is written as sorted JSON with a trailing newline."""
        output = tmp_path / "nested" / "verify_report.json"

        generate_json_report(engine_result, config, output)

        text = output.read_text()
        assert text.endswith("}\n")
        data = json.loads(text)
        assert data["summary"]["failed_checks"] == 1
        assert list(data) == sorted(data)

    def test_deterministic(self, engine_result, config, tmp_path):
        """Test the same inputs give byte-identical reports."""
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"

        generate_json_report(engine_result, config, first)
        generate_json_report(engine_result, config, second)

        assert first.read_bytes() == second.read_bytes()

    def test_numpy_evidence(self, engine_result, config, tmp_path):
        """Test numpy scalars and arrays in evidence are serialised."""
        engine_result.results[0].evidence = {"residual": np.float64(1e-13), "eig": np.ones(2)}
        output = tmp_path / "report.json"

        generate_json_report(engine_result, config, output)

        checks = {c["check_id"]: c for c in json.loads(output.read_text())["checks"]}
        assert checks["zeta-check"]["evidence"] == {"residual": 1e-13, "eig": [1.0, 1.0]}
