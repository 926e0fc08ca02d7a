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
"""Metadata recorded in every artifact."""

import hashlib
import json
import logging
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
import scipy

from config.schema import ExperimentConfig

logger = logging.getLogger(__name__)

PACKAGE_NAME = "kicked-ising-protocol"


def get_package_version() -> str:
    """
    Installed version of this package.

    Returns:
        Version string, or "unknown" when running from a source checkout
    """
    try:
        return version(PACKAGE_NAME)
    except PackageNotFoundError:
        logger.debug(f"{PACKAGE_NAME} is not installed, version unknown")
        return "unknown"


def canonical_config(config: ExperimentConfig) -> Dict[str, Any]:
    """JSON-ready config without the file location."""
    return config.model_dump(mode="json", exclude={"config_file"})


def compute_config_hash(config: ExperimentConfig) -> str:
    """
    Compute SHA-256 hash of the canonical config JSON.

    Args:
        config: Experiment configuration

    Returns:
        Hex digest; equal configs give equal hashes wherever the file lives
    """
    text = json.dumps(canonical_config(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def extract_report_metadata(config: ExperimentConfig) -> Dict[str, Any]:
    """
    Extract metadata for artifacts.

    No timestamps or absolute paths are recorded, so the same config gives
    byte-identical artifacts.

    Args:
        config: Experiment configuration

    Returns:
        Dictionary with metadata fields
    """
    chain = config.chain_config()
    metadata: Dict[str, Any] = {
        "config_hash": compute_config_hash(config),
        "package_version": get_package_version(),
        "numpy_version": np.__version__,
        "scipy_version": scipy.__version__,
        "length": chain.length,
        "boundary": chain.boundary.value,
        "block": chain.block_size_a,
        "kicks": config.kick_count(),
        "backend": config.backend.value,
        "seed": config.seed,
    }
    config_file: Optional[str] = config.config_file
    if config_file:
        metadata["config_file"] = Path(config_file).name
    return metadata
