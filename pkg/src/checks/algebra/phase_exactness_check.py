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
"""Pauli product phases and commutation against the matrix oracle."""

import numpy as np

from checks.base import BaseCheck
from checks.result import CheckResult, CheckSeverity
from pauli.strings import BITS, PauliString, commutes, pauli_mul, to_matrix

SAMPLES = 200
MAX_SITES = 6


def _random_string(rng: np.random.Generator, length: int) -> PauliString:
    letters = "".join(rng.choice(sorted(BITS), size=length))
    return PauliString.from_letters(letters, int(rng.integers(4)))


class PhaseExactnessCheck(BaseCheck):
    """Seeded random strings: product and commutation agree with dense matrices."""

    check_id = "pauli-phase-exactness"
    default_severity = CheckSeverity.ERROR
    check_tags = ["algebra", "property"]

    def _evaluate_impl(self) -> CheckResult:
        rng = self.rng()
        failures = []
        for sample in range(SAMPLES):
            length = int(rng.integers(1, MAX_SITES + 1))
            p = _random_string(rng, length)
            q = _random_string(rng, length)
            mp, mq = to_matrix(p), to_matrix(q)
            product_ok = np.allclose(to_matrix(pauli_mul(p, q)), mp @ mq, atol=1e-12)
            commute_ok = commutes(p, q) == np.allclose(mp @ mq, mq @ mp, atol=1e-12)
            if not (product_ok and commute_ok):
                failures.append({"sample": sample, "p": str(p), "q": str(q)})

        evidence = {"samples": SAMPLES, "seed": self.config.seed, "failures": failures[:10]}
        return self._compare(
            not failures,
            f"{SAMPLES} random products match the matrix oracle",
            f"{len(failures)} of {SAMPLES} random products disagree with the matrix oracle",
            evidence,
            remediation="Inspect the phase bookkeeping in pauli_mul",
        )
