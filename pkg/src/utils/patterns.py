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
"""Glob pattern matching for check selection."""

import fnmatch
from typing import Iterable


def matches_patterns(name: str, patterns: Iterable[str]) -> bool:
    """
    Check if a name matches any of the glob patterns.

    Examples:
        - "vn-*" matches "vn-closed-form" and "vn-structure"
        - "*" matches everything

    Args:
        name: Identifier to test (e.g. a check id)
        patterns: Glob patterns to match against

    Returns:
        True if name matches any pattern, False otherwise
    """
    return any(fnmatch.fnmatchcase(name, pattern) for pattern in patterns)
