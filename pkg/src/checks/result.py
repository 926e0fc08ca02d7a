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
"""Check result data structures."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


class CheckStatus(str, Enum):
    """Check evaluation status."""

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class CheckSeverity(str, Enum):
    """Check severity levels."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass
class CheckResult:
    """Result from evaluating a single check."""

    check_id: str
    severity: CheckSeverity
    status: CheckStatus
    message: str
    evidence: Dict[str, Any] = field(default_factory=dict)
    remediation: str = ""
    check_tags: List[str] = field(default_factory=list)

    def is_failure(self) -> bool:
        return self.status == CheckStatus.FAIL

    def is_error(self) -> bool:
        """Check if this is an error-level failure."""
        return self.is_failure() and self.severity == CheckSeverity.ERROR

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "check_id": self.check_id,
            "severity": self.severity.value,
            "status": self.status.value,
            "message": self.message,
            "evidence": self.evidence,
            "remediation": self.remediation,
            "tags": self.check_tags,
        }
