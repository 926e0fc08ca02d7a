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
"""Open L=4 chain after one and two kicks against the reference amplitudes."""

import numpy as np

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.analysis import reduced_density_matrix
from dense.channel import CENTRAL_PAIR
from dense.evolution import evolve
from dense.golden import GOLDEN_STATES, RHO23_PSI1, RHO23_PSI2
from interaction.chain import ChainConfig

TOLERANCE = 1e-12


class GoldenStatesCheck(BaseCheck):
    """evolve(1) and evolve(2) reproduce the tabulated amplitudes exactly."""

    check_id = "golden-states"
    default_severity = CheckSeverity.ERROR
    check_tags = ["states", "dense"]

    def _evaluate_impl(self) -> CheckResult:
        chain = ChainConfig.equal_blocks(4)
        pair_states = {1: RHO23_PSI1, 2: RHO23_PSI2}
        errors = {}
        for n, expected in GOLDEN_STATES.items():
            state = evolve(n, chain)
            rho = reduced_density_matrix(state, CENTRAL_PAIR).matrix
            errors[f"psi_{n}"] = float(np.max(np.abs(state.amplitudes - expected)))
            errors[f"rho23_psi_{n}"] = float(np.max(np.abs(rho - pair_states[n])))

        failing = sorted(name for name, error in errors.items() if error >= TOLERANCE)
        return self._compare(
            not failing,
            "Amplitudes after one and two kicks match without a phase quotient",
            f"Reference comparison fails for {', '.join(failing)}",
            {"max_entry_errors": errors, "tolerance": TOLERANCE},
            remediation="Check the basis ordering and the gate sign convention",
        )
