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
"""Base check class for verification runs."""

import logging
from abc import ABC, abstractmethod
from typing import List, Optional

import numpy as np

from checks.result import CheckResult, CheckSeverity, CheckStatus
from config.schema import ExperimentConfig
from interaction.chain import ChainConfig
from utils.errors import NotCoveredError, ResourceLimitError
from utils.limits import DENSE_SITE_LIMIT, MATRIX_SITE_LIMIT
from utils.patterns import matches_patterns

logger = logging.getLogger(__name__)


class BaseCheck(ABC):
    """Base class for all verification checks."""

    # Check metadata (override in subclasses)
    check_id: str = "base-check"
    default_severity: CheckSeverity = CheckSeverity.ERROR
    check_tags: List[str] = []

    def __init__(self, config: ExperimentConfig):
        """
        Initialize check.

        Args:
            config: Experiment configuration
        """
        self.config = config
        self.chain: ChainConfig = config.chain_config()
        self.kicks = config.kick_count()
        self.severity = self._get_severity()

    def _get_severity(self) -> CheckSeverity:
        """Get severity from config overrides or use default."""
        override = self.config.checks.severity_overrides.get(self.check_id)
        if override is not None:
            return CheckSeverity(override.value)
        return self.default_severity

    def rng(self) -> np.random.Generator:
        """Generator seeded from the experiment seed."""
        return np.random.default_rng(self.config.seed)

    def should_run(self) -> bool:
        """
        Check if this check should run based on include/exclude patterns.

        Returns:
            True if check should run, False otherwise
        """
        if not matches_patterns(self.check_id, self.config.checks.include):
            return False
        return not matches_patterns(self.check_id, self.config.checks.exclude)

    def evaluate(self) -> CheckResult:
        """
        Evaluate the check.

        Size-cap refusals and uncovered cases become SKIP; any other exception
        becomes FAIL.

        Returns:
            CheckResult with evaluation outcome
        """
        if not self.should_run():
            return self._create_skip_result("Check excluded by configuration")

        precondition_result = self._check_preconditions()
        if precondition_result:
            return precondition_result

        try:
            return self._evaluate_impl()
        except ResourceLimitError as e:
            return self._create_skip_result(f"Refused: {e}", {"limit": e.limit, "value": e.value})
        except NotCoveredError as e:
            return self._create_skip_result(f"Not covered: {e}")
        except Exception as e:
            logger.exception(f"Error evaluating check {self.check_id}: {e}")
            return self._create_fail_result(
                message=f"Check evaluation failed: {e}",
                evidence={"error": str(e)},
                remediation="Please report this error to the maintainers.",
            )

    def _check_preconditions(self) -> Optional[CheckResult]:
        """
        Check if preconditions for evaluation are met.

        Returns:
            CheckResult with skip status if preconditions not met, None otherwise
        """
        return None

    def _require_dense(self) -> Optional[CheckResult]:
        if self.chain.length > DENSE_SITE_LIMIT:
            return self._create_skip_result(
                f"L={self.chain.length} exceeds the dense limit of {DENSE_SITE_LIMIT}"
            )
        return None

    def _require_matrices(self) -> Optional[CheckResult]:
        if self.chain.length > MATRIX_SITE_LIMIT:
            return self._create_skip_result(
                f"L={self.chain.length} exceeds the dense-matrix limit of {MATRIX_SITE_LIMIT}"
            )
        return None

    @abstractmethod
    def _evaluate_impl(self) -> CheckResult:
        """
        Implement check-specific evaluation logic.

        Returns:
            CheckResult with evaluation outcome
        """

    def _result(
        self, status: CheckStatus, message: str, evidence: Optional[dict], remediation: str = ""
    ) -> CheckResult:
        return CheckResult(
            check_id=self.check_id,
            severity=self.severity,
            status=status,
            message=message,
            evidence=evidence or {},
            remediation=remediation,
            check_tags=list(self.check_tags),
        )

    def _create_pass_result(self, message: str, evidence: Optional[dict] = None) -> CheckResult:
        """Create a passing result."""
        return self._result(CheckStatus.PASS, message, evidence)

    def _create_fail_result(
        self, message: str, evidence: Optional[dict] = None, remediation: str = ""
    ) -> CheckResult:
        """Create a failing result."""
        return self._result(CheckStatus.FAIL, message, evidence, remediation)

    def _create_skip_result(self, message: str, evidence: Optional[dict] = None) -> CheckResult:
        """Create a skipped result."""
        return self._result(CheckStatus.SKIP, message, evidence)

    def _compare(
        self,
        ok: bool,
        passed: str,
        failed: str,
        evidence: Optional[dict] = None,
        remediation: str = "",
    ) -> CheckResult:
        """Pass or fail on a single condition."""
        if ok:
            return self._create_pass_result(passed, evidence)
        return self._create_fail_result(failed, evidence, remediation)
