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
"""Dense and stabilizer backends agree on entropies and pair states."""

import logging
from typing import Optional

import numpy as np

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from dense.analysis import block_entropy, reduced_density_matrix, scan_pairs
from dense.evolution import evolve_states
from stabilizer.measures import tableau_block_entropy, tableau_two_qubit_rdm
from stabilizer.tableau import tableau_states

logger = logging.getLogger(__name__)

ENTROPY_TOLERANCE = 1e-9
RDM_TOLERANCE = 1e-10


class BackendEquivalenceCheck(BaseCheck):
    """Block entropy (1e-9) and scanned pair RDMs (1e-10) match kick by kick."""

    check_id = "backend-equivalence"
    default_severity = CheckSeverity.ERROR
    check_tags = ["entropy", "dense", "stabilizer"]

    def _check_preconditions(self) -> Optional[CheckResult]:
        return self._require_dense()

    def _evaluate_impl(self) -> CheckResult:
        m = self.chain.block_size_a
        pairs = scan_pairs(self.chain, self.config.all_pairs)
        entropy_failures = []
        rdm_failures = []
        worst_rdm = 0.0
        steps = zip(
            evolve_states(self.kicks, self.chain),
            tableau_states(self.kicks, self.chain, self.config.debug_checks),
        )
        for (n, state), (_, tab) in steps:
            dense_entropy = block_entropy(state, m)
            tableau_entropy = tableau_block_entropy(tab, m)
            if abs(dense_entropy - tableau_entropy) >= ENTROPY_TOLERANCE:
                entropy_failures.append(
                    {"n": n, "dense": dense_entropy, "stabilizer": tableau_entropy}
                )
            for i, j in pairs:
                dense_rdm = reduced_density_matrix(state, (i, j)).matrix
                error = float(np.max(np.abs(dense_rdm - tableau_two_qubit_rdm(tab, i, j).matrix)))
                worst_rdm = max(worst_rdm, error)
                if error >= RDM_TOLERANCE:
                    rdm_failures.append({"n": n, "pair": [i, j], "error": error})
            logger.debug(f"backend equivalence n={n}: S={dense_entropy:.6f}/{tableau_entropy}")

        evidence = {
            "n_max": self.kicks,
            "pairs": [list(pair) for pair in pairs],
            "entropy_failures": entropy_failures[:10],
            "rdm_failures": rdm_failures[:10],
            "max_rdm_error": worst_rdm,
        }
        return self._compare(
            not (entropy_failures or rdm_failures),
            f"Backends agree for n = 0..{self.kicks} on entropy and {len(pairs)} pair states",
            f"Backends disagree: {len(entropy_failures)} entropy and "
            f"{len(rdm_failures)} pair-state mismatches",
            evidence,
        )
