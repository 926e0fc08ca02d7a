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
"""Entropy-profile command implementation."""

import argparse
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from analytics.profiles import Source, closed_form_or_none, entropy_profile
from cli.commands.common import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    load_experiment,
    output_path,
)
from config.schema import Backend, ExperimentConfig
from reporting.metadata import extract_report_metadata
from reporting.tables import ENTROPY_HEADER, Row, write_table
from utils.limits import DENSE_SITE_LIMIT

logger = logging.getLogger(__name__)

DELTA_TOLERANCE = 1e-6


def entropy_table(config: ExperimentConfig) -> Tuple[List[Row], bool]:
    """
    Rows (n, entropy, oracle, delta) for n = 0..n_max.

    The stabilizer backend supplies the entropy column unless the backend is
    dense. With both backends the dense profile is compared as well.

    Returns:
        The rows, and whether every delta and backend difference is within 1e-6
    """
    chain = config.chain_config()
    n_max = config.kick_count()
    primary = Source.DENSE if config.backend == Backend.DENSE else Source.STABILIZER
    profile = entropy_profile(chain, n_max, primary, config.debug_checks)

    ok = True
    if config.backend == Backend.BOTH and chain.length <= DENSE_SITE_LIMIT:
        dense = entropy_profile(chain, n_max, Source.DENSE)
        mismatched = [
            p.n
            for p, q in zip(profile.points, dense.points)
            if abs(p.entropy - q.entropy) > DELTA_TOLERANCE
        ]
        if mismatched:
            logger.error(f"Dense and stabilizer entropies differ at n = {mismatched}")
            ok = False

    rows: List[Row] = []
    off_oracle = []
    for point in profile.points:
        oracle = closed_form_or_none(chain, point.n)
        delta = None if oracle is None else float(point.entropy) - oracle
        if delta is not None and abs(delta) > DELTA_TOLERANCE:
            off_oracle.append(point.n)
        rows.append((point.n, float(point.entropy), oracle, delta))

    if off_oracle:
        logger.error(f"Entropy deviates from the sawtooth oracle at n = {off_oracle}")
        ok = False
    return rows, ok


def write_entropy_profile(config: ExperimentConfig, out: Optional[Path]) -> bool:
    """Compute and write the entropy table; True when all deltas are within tolerance."""
    rows, ok = entropy_table(config)
    write_table(ENTROPY_HEADER, rows, config.format, out, extract_report_metadata(config))
    return ok


def entropy_profile_command(args: argparse.Namespace) -> int:
    """
    Execute the entropy-profile command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 success, 1 if any |delta| > 1e-6, 2 for a bad config)
    """
    config = load_experiment(args)
    if config is None:
        return EXIT_USAGE
    ok = write_entropy_profile(config, output_path(config))
    return EXIT_OK if ok else EXIT_CHECK_FAILED
