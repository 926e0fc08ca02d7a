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
"""Check evaluation engine."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Type

from checks.base import BaseCheck
from checks.result import CheckResult, CheckStatus
from config.schema import ExperimentConfig

logger = logging.getLogger(__name__)


@dataclass
class CheckEngineResult:
    """Result from running the check engine."""

    results: List[CheckResult] = field(default_factory=list)
    total_checks: int = 0
    passed_checks: int = 0
    failed_checks: int = 0
    skipped_checks: int = 0
    error_count: int = 0
    warning_count: int = 0

    def has_errors(self) -> bool:
        """Check if there are any error-level failures."""
        return self.error_count > 0

    def has_failures(self) -> bool:
        """Check if any check failed, whatever its severity."""
        return self.failed_checks > 0

    def failed_ids(self) -> List[str]:
        return [r.check_id for r in self.results if r.is_failure()]

    def to_dict(self) -> Dict:
        """Convert to dictionary for serialization."""
        return {
            "total_checks": self.total_checks,
            "passed_checks": self.passed_checks,
            "failed_checks": self.failed_checks,
            "skipped_checks": self.skipped_checks,
            "error_count": self.error_count,
            "warning_count": self.warning_count,
            "results": [r.to_dict() for r in sorted(self.results, key=lambda r: r.check_id)],
        }


class CheckEngine:
    """Engine for evaluating verification checks."""

    def __init__(self, config: ExperimentConfig):
        """
        Initialize check engine.

        Args:
            config: Experiment configuration
        """
        self.config = config
        self.checks: List[Type[BaseCheck]] = []

    def register_check(self, check_class: Type[BaseCheck]) -> None:
        """
        Register a check class.

        Args:
            check_class: Check class to register
        """
        self.checks.append(check_class)
        logger.debug(f"Registered check: {check_class.check_id}")

    def register_checks(self, check_classes: List[Type[BaseCheck]]) -> None:
        """
        Register multiple check classes.

        Args:
            check_classes: List of check classes to register
        """
        for check_class in check_classes:
            self.register_check(check_class)

    def evaluate_all(self) -> CheckEngineResult:
        """
        Evaluate all registered checks.

        Returns:
            CheckEngineResult with all check results
        """
        logger.info(f"Evaluating {len(self.checks)} checks")

        engine_result = CheckEngineResult()
        engine_result.total_checks = len(self.checks)

        for check_class in self.checks:
            check = check_class(self.config)
            logger.debug(f"Evaluating check: {check.check_id}")
            result = check.evaluate()
            engine_result.results.append(result)

            if result.status == CheckStatus.PASS:
                engine_result.passed_checks += 1
            elif result.status == CheckStatus.FAIL:
                engine_result.failed_checks += 1
                if result.is_error():
                    engine_result.error_count += 1
                else:
                    engine_result.warning_count += 1
            else:
                engine_result.skipped_checks += 1

            if result.is_error():
                log_level = logging.ERROR
            elif result.is_failure():
                log_level = logging.WARNING
            else:
                log_level = logging.INFO
            logger.log(log_level, f"[{result.status.value.upper()}] {check.check_id}: {result.message}")

        logger.info(
            f"Check evaluation complete: {engine_result.passed_checks} passed, "
            f"{engine_result.failed_checks} failed ({engine_result.error_count} errors, "
            f"{engine_result.warning_count} warnings), {engine_result.skipped_checks} skipped"
        )
        return engine_result
