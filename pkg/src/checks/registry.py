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
"""The checks run by the verify command, in evaluation order."""

from typing import List, Type

from checks.algebra import FactorizationCheck, GateLayersCheck, PhaseExactnessCheck
from checks.base import BaseCheck
from checks.entropy import (
    BackendEquivalenceCheck,
    ConcurrencePredictionCheck,
    EntropyErratumCheck,
    EntropyOracleCheck,
)
from checks.operators import DecimationStringsCheck, VnClosedFormCheck, VnStructureCheck
from checks.states import (
    BellPairPhaseCheck,
    GoldenStatesCheck,
    InteractionEquivalenceCheck,
    PauliChannelCheck,
)

ALL_CHECKS: List[Type[BaseCheck]] = [
    PhaseExactnessCheck,
    GoldenStatesCheck,
    GateLayersCheck,
    FactorizationCheck,
    InteractionEquivalenceCheck,
    VnClosedFormCheck,
    VnStructureCheck,
    PauliChannelCheck,
    EntropyOracleCheck,
    BackendEquivalenceCheck,
    ConcurrencePredictionCheck,
    EntropyErratumCheck,
    DecimationStringsCheck,
    BellPairPhaseCheck,
]
