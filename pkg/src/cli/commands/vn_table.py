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
"""V_n table command implementation."""

import argparse
import logging
from pathlib import Path
from typing import List, Optional

from cli.commands.common import EXIT_OK, EXIT_USAGE, load_experiment, output_path
from config.schema import ExperimentConfig
from interaction.chain import ChainConfig
from interaction.operators import (
    InteractionOperator,
    describe_operator,
    interaction_operator_closed_form,
    interaction_operators,
)
from reporting.metadata import extract_report_metadata
from reporting.tables import VN_HEADER, Row, write_table
from utils.errors import NotCoveredError

logger = logging.getLogger(__name__)


def _render(operator: InteractionOperator, cfg: ChainConfig) -> str:
    return "; ".join(describe_operator(g, cfg) for g in operator.generators)


def vn_table(config: ExperimentConfig) -> List[Row]:
    """Rows (n, recursive, closed form or None, match or None) for n = 1..n_max."""
    chain = config.chain_config()
    rows: List[Row] = []
    for operator in interaction_operators(config.kick_count(), chain):
        try:
            closed = interaction_operator_closed_form(operator.n, chain)
        except NotCoveredError:
            rows.append((operator.n, _render(operator, chain), None, None))
            continue
        match = closed.generators == operator.generators
        if not match:
            logger.warning(f"V_{operator.n}: recursion {operator} differs from closed form {closed}")
        rows.append((operator.n, _render(operator, chain), _render(closed, chain), match))
    return rows


def write_vn_table(config: ExperimentConfig, out: Optional[Path]) -> None:
    rows = vn_table(config)
    write_table(VN_HEADER, rows, config.format, out, extract_report_metadata(config))


def vn_table_command(args: argparse.Namespace) -> int:
    """
    Execute the vn-table command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 success, 2 for a bad config)
    """
    config = load_experiment(args)
    if config is None:
        return EXIT_USAGE
    write_vn_table(config, output_path(config))
    return EXIT_OK
