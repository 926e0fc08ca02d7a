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
"""Tests for the concurrence-scan command."""

import pytest

from cli.commands.concurrence import (
    concurrence_scan_command,
    concurrence_table,
    write_concurrence_scan,
)
from config.schema import ExperimentConfig


class TestConcurrenceTable:
    """Tests for concurrence_table."""

    def test_mirror_pairs(self):
        """Test mirror pairs are scanned for every kick."""
        rows = concurrence_table(ExperimentConfig(length=4))

        assert len(rows) == 2 * 5
        assert {(row[0], row[1]) for row in rows} == {(1, 4), (2, 3)}
        assert [row[2] for row in rows] == sorted(row[2] for row in rows)

    def test_matches_prediction_on_four_sites(self):
        """Test simulated concurrences equal the predicted revivals."""
        rows = concurrence_table(ExperimentConfig(length=4, kicks=8))

        for _, _, _, concurrence, predicted in rows:
            assert concurrence == pytest.approx(predicted, abs=1e-9)

    def test_bell_pairs_at_half_period(self):
        """Test both pairs are maximally entangled after two kicks."""
        rows = concurrence_table(ExperimentConfig(length=4))

        at_two = [row[3] for row in rows if row[2] == 2]
        assert at_two == pytest.approx([1.0, 1.0], abs=1e-9)

    def test_all_pairs(self):
        """Test --all-pairs scans every unordered pair."""
        rows = concurrence_table(ExperimentConfig(length=4, kicks=2, all_pairs=True))

        assert len(rows) == 6 * 3

    def test_stabilizer_backend_agrees(self):
        """Test the tableau scan gives the same table as the dense scan."""
        dense = concurrence_table(ExperimentConfig(length=6, backend="dense", kicks=6))
        tableau = concurrence_table(ExperimentConfig(length=6, backend="stabilizer", kicks=6))

        assert [row[:3] for row in dense] == [row[:3] for row in tableau]
        for d, t in zip(dense, tableau):
            assert d[3] == pytest.approx(t[3], abs=1e-9)


def test_write_concurrence_scan(tmp_path):
    """Test the CSV artifact has the frozen header."""
    out = tmp_path / "scan.csv"

    write_concurrence_scan(ExperimentConfig(length=4, kicks=1), out)

    lines = out.read_text().splitlines()
    assert lines[0] == "site_i,site_j,n,concurrence,predicted"
    assert len(lines) == 1 + 2 * 2


class TestConcurrenceScanCommand:
    """Tests for concurrence_scan_command."""

    def test_success(self, isolated, parse, capsys):
        """Test a scan to stdout."""
        exit_code = concurrence_scan_command(parse("concurrence-scan", "--length", "4"))

        assert exit_code == 0
        assert capsys.readouterr().out.startswith("site_i,site_j,n,concurrence,predicted\n")

    def test_bad_config(self, isolated, parse):
        """Test an invalid block is a usage error."""
        assert concurrence_scan_command(parse("concurrence-scan", "--length", "4", "--block", "4")) == 2
