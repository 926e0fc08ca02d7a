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
"""Pauli algebra and gate-layer checks."""

from checks.algebra.factorization_check import FactorizationCheck
from checks.algebra.gate_layers_check import GateLayersCheck
from checks.algebra.phase_exactness_check import PhaseExactnessCheck

__all__ = ["FactorizationCheck", "GateLayersCheck", "PhaseExactnessCheck"]
