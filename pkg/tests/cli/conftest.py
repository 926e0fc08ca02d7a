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
"""Shared fixtures for CLI tests."""

import pytest


@pytest.fixture
def isolated(tmp_path, monkeypatch):
    """Working directory without a discoverable config file."""
    (tmp_path / ".git").mkdir()
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def parse():
    """Parse a command line into the Namespace a command receives."""
    from cli.main import create_parser

    def _parse(*argv: str):
        return create_parser().parse_args(list(argv))

    return _parse
