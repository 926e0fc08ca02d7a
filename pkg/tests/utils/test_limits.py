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
"""Tests for size caps, error types and name patterns."""

import pytest

from utils.errors import NotCoveredError, ProtocolError, ResourceLimitError, StructuralError
from utils.limits import DENSE_SITE_LIMIT, MATRIX_SITE_LIMIT, RDM_SITE_LIMIT, check_limit
from utils.patterns import matches_patterns


def test_caps():
    """Test the configured caps."""
    assert MATRIX_SITE_LIMIT == 10
    assert DENSE_SITE_LIMIT == 24
    assert RDM_SITE_LIMIT == 12


def test_check_limit_allows_equal():
    """Test a value at the cap is allowed."""
    check_limit("sites", 24, 24)


def test_check_limit_refuses():
    """Test the error carries the name, value and limit."""
    with pytest.raises(ResourceLimitError) as exc_info:
        check_limit("sites", 25, 24)

    assert exc_info.value.name == "sites"
    assert exc_info.value.value == 25
    assert exc_info.value.limit == 24


def test_error_hierarchy():
    """Test every error derives from ProtocolError."""
    assert issubclass(StructuralError, ValueError)
    for error in (StructuralError, ResourceLimitError, NotCoveredError):
        assert issubclass(error, ProtocolError)


@pytest.mark.parametrize(
    "name,patterns,expected",
    [
        ("entropy-oracle", ["*"], True),
        ("entropy-oracle", ["entropy-*"], True),
        ("golden-states", ["entropy-*"], False),
        ("golden-states", [], False),
    ],
)
def test_matches_patterns(name, patterns, expected):
    """Test fnmatch-style matching over check ids."""
    assert matches_patterns(name, patterns) is expected
