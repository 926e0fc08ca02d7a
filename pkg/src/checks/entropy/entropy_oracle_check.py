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
"""Simulated block entropy against the sawtooth closed form."""

from typing import List, Optional

from analytics.profiles import Source, entropy_closed_form, entropy_profile
from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from config.schema import Backend
from utils.limits import DENSE_SITE_LIMIT

TOLERANCE = 1e-9


class EntropyOracleCheck(BaseCheck):
    """S_M(n) from the configured backends equals entropy_closed_form for n = 0..n_max."""

    check_id = "entropy-oracle"
    default_severity = CheckSeverity.ERROR
    check_tags = ["entropy"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        if self.chain.is_closed and self.chain.block_size_a % 2:
            return self._create_skip_result("No closed-chain entropy formula for odd M")
        return None

    def _sources(self) -> List[Source]:
        if self.config.backend == Backend.DENSE:
            return [Source.DENSE]
        if self.config.backend == Backend.BOTH and self.chain.length <= DENSE_SITE_LIMIT:
            return [Source.STABILIZER, Source.DENSE]
        return [Source.STABILIZER]

    def _evaluate_impl(self) -> CheckResult:
        deviations = []
        for source in self._sources():
            profile = entropy_profile(self.chain, self.kicks, source, self.config.debug_checks)
            for point in profile.points:
                expected = entropy_closed_form(self.chain, point.n)
                if abs(point.entropy - expected) >= TOLERANCE:
                    deviations.append(
                        {
                            "source": source.value,
                            "n": point.n,
                            "simulated": point.entropy,
                            "closed_form": expected,
                        }
                    )

        sources = [source.value for source in self._sources()]
        evidence = {"sources": sources, "n_max": self.kicks, "deviations": deviations[:20]}
        return self._compare(
            not deviations,
            f"Sawtooth matches {', '.join(sources)} at every n = 0..{self.kicks}",
            f"{len(deviations)} simulated entropies deviate from the sawtooth",
            evidence,
        )
