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
"""Tests for shared command helpers."""

from pathlib import Path

from cli.commands.common import cli_overrides, load_experiment, output_path
from config.loader import CLI_TO_CONFIG
from config.schema import Backend, ExperimentConfig
from interaction.chain import Boundary


def test_cli_overrides_covers_every_flag(parse):
    """Test every config-backed flag is forwarded, None where unset."""
    overrides = cli_overrides(parse("verify", "--length", "6"))

    assert set(overrides) == set(CLI_TO_CONFIG)
    assert overrides["length"] == 6
    assert overrides["boundary"] is None


def test_cli_overrides_tolerates_missing_attributes():
    """Test a bare Namespace yields all-None overrides."""
    from argparse import Namespace

    assert all(v is None for v in cli_overrides(Namespace()).values())


class TestLoadExperiment:
    """Tests for load_experiment."""

    def test_defaults(self, isolated, parse):
        """Test defaults apply when nothing is configured."""
        config = load_experiment(parse("run"))

        assert config.length == 20
        assert config.backend == Backend.BOTH

    def test_flags_override_file(self, isolated, parse):
        """Test CLI flags win over the discovered config file."""
        (isolated / "kicked-ising.yml").write_text("length: 8\nboundary: closed\n")

        config = load_experiment(parse("run", "--length", "6"))

        assert config.length == 6
        assert config.chain_config().boundary == Boundary.CLOSED

    def test_explicit_config_file(self, isolated, parse):
        """Test --config selects a file outside the search path."""
        path = isolated / "elsewhere.json"
        path.write_text('{"L": 10, "M": 4}')

        config = load_experiment(parse("run", "--config", str(path)))

        assert config.chain_config().block_size_a == 4

    def test_odd_length_is_usage_error(self, isolated, parse, caplog):
        """Test validation failures return None and log the cause."""
        assert load_experiment(parse("run", "--length", "5")) is None
        assert "Failed to load configuration" in caplog.text

    def test_missing_config_file(self, isolated, parse):
        """Test a missing --config file returns None."""
        assert load_experiment(parse("run", "--config", str(isolated / "nope.yml"))) is None

    def test_broken_yaml(self, isolated, parse):
        """Test unparsable YAML returns None."""
        (isolated / "kicked-ising.yml").write_text("length: [8\n")

        assert load_experiment(parse("run")) is None


def test_output_path():
    """Test --out maps to a Path, absent --out to stdout."""
    assert output_path(ExperimentConfig()) is None
    assert output_path(ExperimentConfig(out="table.csv")) == Path("table.csv")
