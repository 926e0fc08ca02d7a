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
"""Dense pair concurrences against the revival rule."""

from typing import Optional

from analytics.profiles import concurrence_prediction
from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.analysis import concurrence_scan

TOLERANCE = 1e-9


class ConcurrencePredictionCheck(BaseCheck):
    """Mirror pairs of an open chain revive at odd multiples of L/2; every other concurrence is 0."""

    check_id = "concurrence-prediction"
    default_severity = CheckSeverity.ERROR
    check_tags = ["entropy", "dense", "conjecture"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        return self._require_dense()

    def _evaluate_impl(self) -> CheckResult:
        mismatches = []
        revivals = []
        for row in concurrence_scan(self.chain, self.kicks, self.config.all_pairs):
            pair = (row.site_i, row.site_j)
            predicted = concurrence_prediction(self.chain, pair, row.n)
            if row.concurrence > TOLERANCE:
                revivals.append([row.site_i, row.site_j, row.n])
            if abs(row.concurrence - predicted) >= TOLERANCE:
                mismatches.append({**row.to_dict(), "predicted": predicted})

        evidence = {
            "n_max": self.kicks,
            "all_pairs": self.config.all_pairs,
            "revivals": revivals,
            "mismatches": mismatches[:10],
        }
        return self._compare(
            not mismatches,
            f"Concurrences match the revival rule ({len(revivals)} revivals)",
            f"{len(mismatches)} concurrences deviate from the revival rule",
            evidence,
            remediation="Rerun concurrence-scan --all-pairs to inspect the mismatching pairs",
        )
