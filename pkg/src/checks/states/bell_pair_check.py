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
"""Printed Bell pair against the pair produced by V_1."""

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.channel import CENTRAL_PAIR
from dense.equivalence import interaction_picture_state
from dense.ladder import BELL_PAIR, PRINTED_BELL_PAIR, place_factors, printed_pair_mismatch
from interaction.chain import ChainConfig

TOLERANCE = 1e-12


class BellPairPhaseCheck(BaseCheck):
    """V_1|0000> holds the pair (|00> + i|11>)/sqrt2; the printed pair has the opposite phase."""

    check_id = "bell-pair-phase"
    default_severity = CheckSeverity.INFO
    check_tags = ["states", "erratum"]

    def _evaluate_impl(self) -> CheckResult:
        chain = ChainConfig.equal_blocks(4)
        produced = interaction_picture_state(1, chain)
        operator_distance = produced.distance(place_factors(4, [(CENTRAL_PAIR, BELL_PAIR)]))
        printed_distance = produced.distance(place_factors(4, [(CENTRAL_PAIR, PRINTED_BELL_PAIR)]))
        evidence = {
            "operator_pair_distance": operator_distance,
            "printed_pair_distance": printed_distance,
            "printed_vs_operator_pair": printed_pair_mismatch(),
        }
        return self._compare(
            operator_distance < TOLERANCE,
            f"V_1 produces (|00> + i|11>)/sqrt2; printed pair differs by {printed_distance:.3f}",
            f"V_1 does not produce the expected pair (distance {operator_distance:.2e})",
            evidence,
        )
