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
"""Post-peak decimation strings: printed, symmetric and recursive forms."""

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from interaction.chain import ChainConfig
from interaction.operators import decimation_table

REFERENCE_LENGTH = 20


class DecimationStringsCheck(BaseCheck):
    """
    Report where the printed decimation strings diverge from the recursion.

    Runs on the configured chain when it is open with equal blocks, otherwise
    on the open L=20 reference chain. Only a symmetric-form mismatch fails.
    """

    check_id = "decimation-strings"
    default_severity = CheckSeverity.INFO
    check_tags = ["operators", "erratum"]

    def _evaluate_impl(self) -> CheckResult:
        chain = self.chain
        if chain.is_closed or not chain.is_equal_blocks:
            chain = ChainConfig.equal_blocks(REFERENCE_LENGTH)
        rows = decimation_table(chain)
        printed_divergent = [row.k for row in rows if not row.printed_matches]
        symmetric_divergent = [row.k for row in rows if not row.symmetric_matches]
        evidence = {
            "length": chain.length,
            "block": chain.block_size_a,
            "printed_divergent_k": printed_divergent,
            "symmetric_divergent_k": symmetric_divergent,
            "rows": [row.to_dict() for row in rows],
        }
        return self._compare(
            not symmetric_divergent,
            f"Symmetric strings match the recursion for k = 1..{len(rows)}; "
            f"printed strings diverge at {len(printed_divergent)} k",
            f"Symmetric strings differ from the recursion at k = {symmetric_divergent}",
            evidence,
        )
