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
"""Shared fixtures for reporting tests."""

import pytest

from checks.engine import CheckEngineResult
from checks.result import CheckResult, CheckSeverity, CheckStatus
from config.schema import ExperimentConfig


@pytest.fixture
def config():
    return ExperimentConfig(length=8, seed=5)


@pytest.fixture
def engine_result():
    """Two passes, one warning failure, one skip and one erratum result."""
    result = CheckEngineResult()
    result.results = [
        CheckResult(
            check_id="zeta-check",
            severity=CheckSeverity.ERROR,
            status=CheckStatus.PASS,
            message="Zeta passed",
            check_tags=["states", "dense"],
        ),
        CheckResult(
            check_id="alpha-check",
            severity=CheckSeverity.WARNING,
            status=CheckStatus.FAIL,
            message="Alpha failed",
            evidence={"failing_n": [3, 5]},
            remediation="Rerun with --debug-checks",
        ),
        CheckResult(
            check_id="skipped-check",
            severity=CheckSeverity.ERROR,
            status=CheckStatus.SKIP,
            message="Refused: dense sites=30 exceeds the limit of 24",
        ),
        CheckResult(
            check_id="printed-formula",
            severity=CheckSeverity.INFO,
            status=CheckStatus.PASS,
            message="Printed formula diverges at 4 points",
            evidence={"divergences": [{"n": 15, "verbatim": 10, "simulated": 5}]},
            check_tags=["erratum", "entropy"],
        ),
    ]
    result.total_checks = 4
    result.passed_checks = 2
    result.failed_checks = 1
    result.skipped_checks = 1
    result.warning_count = 1
    return result
