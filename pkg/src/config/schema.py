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
"""Experiment configuration schema using Pydantic."""

import logging
from enum import Enum
from typing import Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from interaction.chain import Boundary, ChainConfig

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Enum)


class Severity(str, Enum):
    """Check severity levels."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


class Backend(str, Enum):
    """Simulation backend."""

    DENSE = "dense"
    STABILIZER = "stabilizer"
    BOTH = "both"


class Task(str, Enum):
    """Work items run by the ``run`` subcommand, in this order."""

    ENTROPY = "entropy"
    CONCURRENCE = "concurrence"
    VN_TABLE = "vn-table"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    """Table output format."""

    CSV = "csv"
    JSON = "json"


def _coerce(enum_cls: Type[E], value, what: str) -> E:
    if isinstance(value, enum_cls):
        return value
    if isinstance(value, str):
        try:
            return enum_cls(value.lower())
        except ValueError:
            valid_values = [member.value for member in enum_cls]
            raise ValueError(f"Invalid {what} '{value}'. Valid values: {', '.join(valid_values)}")
    raise TypeError(f"{what.capitalize()} must be a string, not {type(value).__name__}")


class CheckConfig(BaseModel):
    """Selection and severity of verification checks."""

    include: List[str] = Field(
        default_factory=lambda: ["*"],
        description="Checks to include (fnmatch patterns over check ids)",
    )
    exclude: List[str] = Field(
        default_factory=list,
        description="Checks to exclude (fnmatch patterns over check ids)",
    )
    severity_overrides: Dict[str, Severity] = Field(
        default_factory=dict,
        description="Override severity for specific checks",
    )

    @field_validator("severity_overrides", mode="before")
    @classmethod
    def validate_severity_overrides(cls, v):
        """Validate severity override values."""
        if not isinstance(v, dict):
            return v
        return {check: _coerce(Severity, sev, f"severity for check '{check}'") for check, sev in v.items()}


class ExperimentConfig(BaseModel):
    """Chain, backend, tasks and output settings for one experiment."""

    model_config = ConfigDict(populate_by_name=True)

    length: int = Field(default=20, alias="L", description="Chain length L (even, at least 4)")
    boundary: Boundary = Field(default=Boundary.OPEN, description="Boundary condition")
    block: Optional[int] = Field(
        default=None, alias="M", description="Size M of block A (default L/2)"
    )
    kicks: Optional[int] = Field(
        default=None,
        alias="n_max",
        description="Largest kick count n_max (default one entropy period)",
    )
    backend: Backend = Field(default=Backend.BOTH, description="Simulation backend")
    tasks: List[Task] = Field(
        default_factory=lambda: list(Task), description="Tasks executed by 'run'"
    )
    out: Optional[str] = Field(default=None, description="Output file of a single table command")
    outdir: str = Field(
        default="kicked-ising-output", description="Output directory for 'run' artifacts"
    )
    format: OutputFormat = Field(default=OutputFormat.CSV, description="Table output format")
    seed: int = Field(default=0, description="Seed of the randomised property checks")
    all_pairs: bool = Field(default=False, description="Scan every pair, not only mirror pairs")
    theta_zero: float = Field(default=1.0, description="Step-function value at 0 (0 or 1)")
    debug_checks: bool = Field(
        default=False, description="Verify tableau invariants after every kick"
    )
    checks: CheckConfig = Field(default_factory=CheckConfig, description="Check selection")
    config_file: Optional[str] = Field(
        default=None, description="Path to the config file (for tracking purposes)"
    )

    @field_validator("boundary", mode="before")
    @classmethod
    def validate_boundary(cls, v):
        """Validate boundary value."""
        return _coerce(Boundary, v, "boundary")

    @field_validator("backend", mode="before")
    @classmethod
    def validate_backend(cls, v):
        """Validate backend value."""
        return _coerce(Backend, v, "backend")

    @field_validator("format", mode="before")
    @classmethod
    def validate_format(cls, v):
        """Validate output format value."""
        return _coerce(OutputFormat, v, "format")

    @field_validator("tasks", mode="before")
    @classmethod
    def validate_tasks(cls, v):
        """Validate task names; a comma-separated string is accepted."""
        if isinstance(v, str):
            v = [item.strip() for item in v.split(",") if item.strip()]
        if not isinstance(v, list):
            raise TypeError(f"Tasks must be a list, not {type(v).__name__}")
        return [_coerce(Task, item, "task") for item in v]

    @field_validator("length")
    @classmethod
    def validate_length(cls, v):
        """Validate chain length."""
        if v < 4 or v % 2:
            raise ValueError(f"Chain length must be even and at least 4, got {v}")
        return v

    @field_validator("kicks")
    @classmethod
    def validate_kicks(cls, v):
        """Validate kick count."""
        if v is not None and v < 0:
            raise ValueError(f"Kick count must be non-negative, got {v}")
        return v

    @field_validator("theta_zero")
    @classmethod
    def validate_theta_zero(cls, v):
        """Validate the step-function convention."""
        if v not in (0.0, 1.0):
            raise ValueError(f"theta_zero must be 0 or 1, got {v}")
        return v

    @model_validator(mode="after")
    def validate_block(self):
        """Validate the block split."""
        if self.block is not None and not 1 <= self.block < self.length:
            raise ValueError(f"Block size M must satisfy 1 <= M < L = {self.length}, got {self.block}")
        return self

    def chain_config(self) -> ChainConfig:
        """
        Chain geometry of this experiment.

        A block larger than L/2 is replaced by its mirror image of size L - M,
        which has the same entropy profile.
        """
        block = self.block if self.block is not None else self.length // 2
        if block > self.length // 2:
            mirrored = self.length - block
            logger.debug(f"Block M={block} exceeds L/2; using the mirrored block M={mirrored}")
            block = mirrored
        return ChainConfig(length=self.length, boundary=self.boundary, block_size_a=block)

    def kick_count(self) -> int:
        """n_max, defaulting to one entropy period of the chain."""
        if self.kicks is not None:
            return self.kicks
        return self.chain_config().entropy_period
