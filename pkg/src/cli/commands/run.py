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
"""Run command: execute the configured tasks into the output directory."""

import argparse
import logging
from pathlib import Path

from cli.commands.common import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, load_experiment
from cli.commands.concurrence import write_concurrence_scan
from cli.commands.entropy import write_entropy_profile
from cli.commands.verify import REPORT_STEM, write_verify_report
from cli.commands.vn_table import write_vn_table
from config.schema import ExperimentConfig, Task
from reporting.tables import extension

logger = logging.getLogger(__name__)

ARTIFACT_STEMS = {
    Task.ENTROPY: "entropy_profile",
    Task.CONCURRENCE: "concurrence_scan",
    Task.VN_TABLE: "vn_table",
    Task.VERIFY: REPORT_STEM,
}


def artifact_path(config: ExperimentConfig, task: Task) -> Path:
    """Default artifact location of a task under the output directory."""
    suffix = ".json" if task == Task.VERIFY else extension(config.format)
    return Path(config.outdir) / f"{ARTIFACT_STEMS[task]}{suffix}"


def run_command(args: argparse.Namespace) -> int:
    """
    Execute the run command.

    Resource refusals propagate and end the run with exit code 3.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 success, 1 a task reported a failure, 2 bad config)
    """
    config = load_experiment(args)
    if config is None:
        return EXIT_USAGE

    outdir = Path(config.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    logger.info(f"Output directory ready: {outdir}")

    failed = []
    for task in config.tasks:
        path = artifact_path(config, task)
        logger.info(f"Task {task.value} -> {path}")
        ok = True
        if task == Task.ENTROPY:
            ok = write_entropy_profile(config, path)
        elif task == Task.CONCURRENCE:
            write_concurrence_scan(config, path)
        elif task == Task.VN_TABLE:
            write_vn_table(config, path)
        else:
            ok = write_verify_report(config, path)
        if not ok:
            failed.append(task.value)

    if failed:
        logger.error(f"Tasks reported failures: {', '.join(failed)}")
        return EXIT_CHECK_FAILED
    logger.info(f"Completed {len(config.tasks)} tasks")
    return EXIT_OK
