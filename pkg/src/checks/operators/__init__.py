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
"""Interaction-picture operator checks."""

from checks.operators.decimation_check import DecimationStringsCheck
from checks.operators.vn_closed_form_check import VnClosedFormCheck
from checks.operators.vn_structure_check import VnStructureCheck

__all__ = ["DecimationStringsCheck", "VnClosedFormCheck", "VnStructureCheck"]
