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
"""Exception hierarchy shared by the simulator packages."""


class ProtocolError(Exception):
    """Base class for all simulator errors."""


class StructuralError(ProtocolError, ValueError):
    """Malformed input: length mismatch, bad site or bond, non-Hermitian operand."""


class ResourceLimitError(ProtocolError):
    """A configured size cap was exceeded."""

    def __init__(self, name: str, value: int, limit: int):
        self.name = name
        self.value = value
        self.limit = limit
        super().__init__(f"{name}={value} exceeds the limit of {limit}")


class NotCoveredError(ProtocolError):
    """No closed form or reference construction exists for the request."""
