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
"""Tests for the verify command."""

import json
from unittest.mock import patch

from checks.engine import CheckEngineResult
from checks.result import CheckResult, CheckSeverity, CheckStatus
from cli.commands.verify import run_checks, verify_command, write_verify_report
from config.schema import ExperimentConfig


def failing_result() -> CheckEngineResult:
    result = CheckEngineResult()
    result.results = [
        CheckResult(
            check_id="vn-closed-form",
            severity=CheckSeverity.WARNING,
            status=CheckStatus.FAIL,
            message="V_3 differs from the closed form",
        )
    ]
    result.total_checks = 1
    result.failed_checks = 1
    result.warning_count = 1
    return result


def test_run_checks_four_sites():
    """Test every registered check passes or skips on four sites."""
    results = run_checks(ExperimentConfig(length=4))

    assert results.total_checks > 0
    assert not results.has_failures()


class TestWriteVerifyReport:
    """Tests for write_verify_report."""

    def test_default_paths(self, isolated):
        """Test reports land in the output directory."""
        config = ExperimentConfig(length=4, outdir=str(isolated / "out"))

        assert write_verify_report(config)

        report = json.loads((isolated / "out" / "verify_report.json").read_text())
        assert report["summary"]["failed_checks"] == 0
        assert (isolated / "out" / "verify_report.md").exists()

    def test_explicit_json_path(self, isolated):
        """Test the Markdown report is written next to an explicit JSON path."""
        config = ExperimentConfig(length=4)

        assert write_verify_report(config, isolated / "reports" / "checks.json")

        assert (isolated / "reports" / "checks.json").exists()
        assert (isolated / "reports" / "checks.md").exists()

    @patch("cli.commands.verify.run_checks")
    def test_failure_still_writes_reports(self, mock_run, isolated, caplog):
        """Test a failed check returns False after writing both reports."""
        mock_run.return_value = failing_result()
        config = ExperimentConfig(length=4, outdir=str(isolated))

        assert not write_verify_report(config)

        assert (isolated / "verify_report.json").exists()
        assert "Verification failed: vn-closed-form" in caplog.text


class TestVerifyCommand:
    """Tests for verify_command."""

    def test_success(self, isolated, parse):
        """Test a clean run exits 0."""
        assert verify_command(parse("verify", "--length", "4")) == 0
        assert (isolated / "kicked-ising-output" / "verify_report.json").exists()

    def test_out_flag(self, isolated, parse):
        """Test --out names the JSON report."""
        assert verify_command(parse("verify", "--length", "4", "--out", "report.json")) == 0
        assert (isolated / "report.md").exists()

    @patch("cli.commands.verify.run_checks")
    def test_warning_failure_exits_one(self, mock_run, isolated, parse):
        """Test any failed check exits 1 whatever its severity."""
        mock_run.return_value = failing_result()

        assert verify_command(parse("verify", "--length", "4")) == 1

    @patch("cli.commands.verify.generate_json_report", side_effect=OSError("disk full"))
    def test_io_error(self, mock_report, isolated, parse, caplog):
        """Test report I/O errors exit 1."""
        assert verify_command(parse("verify", "--length", "4")) == 1
        assert "disk full" in caplog.text

    def test_bad_config(self, isolated, parse):
        """Test an invalid config is a usage error."""
        (isolated / "kicked-ising.yml").write_text("backend: quantum\n")

        assert verify_command(parse("verify")) == 2
