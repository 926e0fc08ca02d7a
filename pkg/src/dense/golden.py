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
"""Reference amplitudes of the open L=4 chain after one and two kicks."""

import numpy as np

PSI_1 = np.zeros(16, dtype=complex)
PSI_1[0b0000] = -1
PSI_1[0b0101] = 1
PSI_1[0b1010] = 1
PSI_1[0b1111] = 1
PSI_1[0b0011] = 1j
PSI_1[0b0110] = 1j
PSI_1[0b1001] = -1j
PSI_1[0b1100] = 1j
PSI_1 /= 2 * np.sqrt(2)

PSI_2 = np.zeros(16, dtype=complex)
PSI_2[0b0000] = 1
PSI_2[0b0110] = -1j
PSI_2[0b1001] = -1j
PSI_2[0b1111] = -1
PSI_2 /= 2

# rho_23 of PSI_1 and PSI_2
RHO23_PSI1 = np.eye(4, dtype=complex) / 4
RHO23_PSI2 = 0.5 * np.array(
    [[1, 0, 0, 1j], [0, 0, 0, 0], [0, 0, 0, 0], [-1j, 0, 0, 1]], dtype=complex
)

GOLDEN_STATES = {1: PSI_1, 2: PSI_2}
