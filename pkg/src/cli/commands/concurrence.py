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
"""Concurrence-scan command implementation."""

import argparse
import logging
from pathlib import Path
from typing import Iterable, List, Optional

from analytics.profiles import concurrence_prediction
from cli.commands.common import EXIT_OK, EXIT_USAGE, load_experiment, output_path
from config.schema import Backend, ExperimentConfig
from dense.analysis import ConcurrenceRow, concurrence_scan
from reporting.metadata import extract_report_metadata
from reporting.tables import CONCURRENCE_HEADER, Row, write_table
from stabilizer.measures import tableau_concurrence_scan
from utils.limits import DENSE_SITE_LIMIT

logger = logging.getLogger(__name__)


def _scan(config: ExperimentConfig) -> Iterable[ConcurrenceRow]:
    chain = config.chain_config()
    n_max = config.kick_count()
    use_dense = config.backend == Backend.DENSE or (
        config.backend == Backend.BOTH and chain.length <= DENSE_SITE_LIMIT
    )
    if use_dense:
        return concurrence_scan(chain, n_max, config.all_pairs)
    logger.info("Reading pair states off the stabilizer tableau")
    return tableau_concurrence_scan(chain, n_max, config.all_pairs, config.debug_checks)


def concurrence_table(config: ExperimentConfig) -> List[Row]:
    """Rows (site_i, site_j, n, concurrence, predicted), ordered by n then pair."""
    chain = config.chain_config()
    rows: List[Row] = []
    for row in _scan(config):
        predicted = concurrence_prediction(chain, (row.site_i, row.site_j), row.n)
        rows.append((row.site_i, row.site_j, row.n, row.concurrence, predicted))
    return rows


def write_concurrence_scan(config: ExperimentConfig, out: Optional[Path]) -> None:
    rows = concurrence_table(config)
    write_table(CONCURRENCE_HEADER, rows, config.format, out, extract_report_metadata(config))


def concurrence_scan_command(args: argparse.Namespace) -> int:
    """
    Execute the concurrence-scan command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 success, 2 for a bad config)
    """
    config = load_experiment(args)
    if config is None:
        return EXIT_USAGE
    write_concurrence_scan(config, output_path(config))
    return EXIT_OK
