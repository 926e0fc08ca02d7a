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
"""Closed-form oracles for entropy and concurrence."""

from analytics.profiles import (
    EntropyPoint,
    EntropyProfile,
    Source,
    closed_form_or_none,
    concurrence_prediction,
    entropy_closed_form,
    entropy_formula_verbatim,
    entropy_profile,
    heaviside,
)

__all__ = [
    "EntropyPoint",
    "EntropyProfile",
    "Source",
    "closed_form_or_none",
    "concurrence_prediction",
    "entropy_closed_form",
    "entropy_formula_verbatim",
    "entropy_profile",
    "heaviside",
]
