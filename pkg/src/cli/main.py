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
"""Main CLI entry point for kicked-ising."""

import argparse
import logging
import sys
from typing import List, Optional

from cli.commands.common import EXIT_INTERRUPTED, EXIT_RESOURCE, EXIT_UNEXPECTED
from config.schema import Backend, OutputFormat, Task
from interaction.chain import Boundary
from utils.errors import ResourceLimitError


def setup_logging(verbose: bool = False) -> None:
    """
    Configure structured logging.

    Args:
        verbose: Enable verbose/debug logging
    """
    log_level = logging.DEBUG if verbose else logging.INFO

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _experiment_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; unset flags fall back to the config file."""
    options = argparse.ArgumentParser(add_help=False)
    group = options.add_argument_group("experiment")
    group.add_argument(
        "--config",
        type=str,
        metavar="PATH",
        help="Config file (default: auto-discover kicked-ising.yml)",
    )
    group.add_argument("--length", type=int, metavar="L", help="Chain length, even (default: 20)")
    group.add_argument(
        "--boundary",
        choices=[b.value for b in Boundary],
        help="Boundary condition (default: open)",
    )
    group.add_argument("--block", type=int, metavar="M", help="Size of block A (default: L/2)")
    group.add_argument(
        "--kicks",
        type=int,
        metavar="N",
        help="Largest kick count n_max (default: one entropy period)",
    )
    group.add_argument(
        "--backend",
        choices=[b.value for b in Backend],
        help="Simulation backend (default: both)",
    )
    group.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Table format (default: csv)",
    )
    group.add_argument(
        "--out",
        type=str,
        metavar="PATH",
        help="Output file (default: stdout; verify writes into --outdir)",
    )
    group.add_argument(
        "--outdir",
        type=str,
        metavar="PATH",
        help="Artifact directory (default: kicked-ising-output)",
    )
    group.add_argument("--seed", type=int, help="Seed of the randomised checks (default: 0)")
    group.add_argument(
        "--tasks",
        type=str,
        metavar="LIST",
        help=f"Comma-separated tasks for 'run' ({', '.join(t.value for t in Task)})",
    )
    group.add_argument(
        "--all-pairs",
        action="store_true",
        default=None,
        help="Scan every site pair instead of mirror pairs",
    )
    group.add_argument(
        "--theta-zero",
        type=float,
        choices=[0.0, 1.0],
        help="Step-function value at zero for the printed formulas (default: 1)",
    )
    group.add_argument(
        "--debug-checks",
        action="store_true",
        default=None,
        help="Verify tableau invariants after every kick",
    )
    return options


def create_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser for the kicked-ising CLI.

    Returns:
        Configured ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="kicked-ising",
        description="Kicked Ising pi/4 protocol simulator and verification suite",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource refusal, 4 unexpected error",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose output",
    )

    options = _experiment_options()
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    entropy_parser = subparsers.add_parser(
        "entropy-profile",
        parents=[options],
        help="Block entropy per kick against the sawtooth oracle",
        description="Write rows n,entropy_ebits,oracle_ebits,delta for n = 0..n_max",
    )
    entropy_parser.set_defaults(func=run_entropy_profile)

    concurrence_parser = subparsers.add_parser(
        "concurrence-scan",
        parents=[options],
        help="Pair concurrences per kick against the revival rule",
        description="Write rows site_i,site_j,n,concurrence,predicted",
    )
    concurrence_parser.set_defaults(func=run_concurrence_scan)

    vn_parser = subparsers.add_parser(
        "vn-table",
        parents=[options],
        help="Interaction-picture operators V_n, recursion against closed form",
        description="Write rows n,recursive,closed_form,match for n = 1..n_max",
    )
    vn_parser.set_defaults(func=run_vn_table)

    verify_parser = subparsers.add_parser(
        "verify",
        parents=[options],
        help="Run the verification checks",
        description="Run every registered check and write JSON and Markdown reports",
    )
    verify_parser.set_defaults(func=run_verify)

    run_parser = subparsers.add_parser(
        "run",
        parents=[options],
        help="Run the configured tasks into --outdir",
        description="Execute the configured tasks in order and write each artifact",
    )
    run_parser.set_defaults(func=run_tasks)

    return parser


def run_entropy_profile(args: argparse.Namespace) -> int:
    """Run the entropy-profile command."""
    from cli.commands.entropy import entropy_profile_command

    return entropy_profile_command(args)


def run_concurrence_scan(args: argparse.Namespace) -> int:
    """Run the concurrence-scan command."""
    from cli.commands.concurrence import concurrence_scan_command

    return concurrence_scan_command(args)


def run_vn_table(args: argparse.Namespace) -> int:
    """Run the vn-table command."""
    from cli.commands.vn_table import vn_table_command

    return vn_table_command(args)


def run_verify(args: argparse.Namespace) -> int:
    """Run the verify command."""
    from cli.commands.verify import verify_command

    return verify_command(args)


def run_tasks(args: argparse.Namespace) -> int:
    """Run the run command."""
    from cli.commands.run import run_command

    return run_command(args)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the kicked-ising CLI.

    Args:
        argv: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 check failure, 2 usage, 3 resource refusal, 4 unexpected, 130 interrupted)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    setup_logging(verbose=args.verbose)
    logger = logging.getLogger(__name__)

    if not args.command:
        parser.print_help()
        return 2

    try:
        return args.func(args)
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_INTERRUPTED
    except ResourceLimitError as e:
        logger.error(f"Refused: {e}")
        return EXIT_RESOURCE
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=args.verbose)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
