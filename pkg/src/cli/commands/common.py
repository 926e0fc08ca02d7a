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
"""Exit codes and configuration loading shared by the commands."""

import argparse
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from config.loader import CLI_TO_CONFIG, load_config
from config.schema import ExperimentConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_UNEXPECTED = 4
EXIT_INTERRUPTED = 130


def cli_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Experiment flags from the parsed arguments, None where unset."""
    return {key: getattr(args, key, None) for key in CLI_TO_CONFIG}


def load_experiment(args: argparse.Namespace) -> Optional[ExperimentConfig]:
    """
    Load the experiment configuration for a command.

    Args:
        args: Parsed command-line arguments

    Returns:
        The validated config, or None after logging a usage error
    """
    try:
        config = load_config(config_path=getattr(args, "config", None), cli_args=cli_overrides(args))
    except (ValidationError, FileNotFoundError, ValueError, yaml.YAMLError) as e:
        logger.error(f"Failed to load configuration: {e}")
        return None

    chain = config.chain_config()
    logger.info(
        f"Chain L={chain.length} {chain.boundary.value} M={chain.block_size_a}, "
        f"n_max={config.kick_count()}, backend={config.backend.value}"
    )
    return config


def output_path(config: ExperimentConfig) -> Optional[Path]:
    """The --out file of a table command, None for stdout."""
    return Path(config.out) if config.out else None
