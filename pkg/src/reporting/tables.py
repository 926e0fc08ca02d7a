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
"""CSV and JSON tables for entropy profiles, concurrence scans and V_n listings."""

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from config.schema import OutputFormat

logger = logging.getLogger(__name__)

ENTROPY_HEADER = ("n", "entropy_ebits", "oracle_ebits", "delta")
CONCURRENCE_HEADER = ("site_i", "site_j", "n", "concurrence", "predicted")
VN_HEADER = ("n", "recursive", "closed_form", "match")

MISSING = "n/a"

Row = Sequence[Any]


def format_value(value: Any) -> str:
    """
    CSV cell text.

    Floats get 12 significant digits, None becomes "n/a" and booleans are
    lower-case.
    """
    if value is None:
        return MISSING
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        text = format(value, ".12g")
        return "0" if text == "-0" else text
    return str(value)


def render_csv(header: Sequence[str], rows: Sequence[Row]) -> str:
    """CSV text with the frozen header and newline line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()


def render_json(
    header: Sequence[str], rows: Sequence[Row], metadata: Optional[Dict[str, Any]] = None
) -> str:
    """JSON document {metadata, columns, rows} with rows as objects."""
    document = {
        "metadata": metadata or {},
        "columns": list(header),
        "rows": [dict(zip(header, row)) for row in rows],
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_table(
    header: Sequence[str],
    rows: Sequence[Row],
    fmt: OutputFormat,
    metadata: Optional[Dict[str, Any]] = None,
) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(header, rows, metadata)
    return render_csv(header, rows)


def write_table(
    header: Sequence[str],
    rows: Sequence[Row],
    fmt: OutputFormat,
    out: Optional[Path] = None,
    metadata: Optional[Dict[str, Any]] = None,
) -> None:
    """
    Write a table to a file, or to stdout when no path is given.

    Args:
        header: Column names in fixed order
        rows: Row values aligned with the header
        fmt: CSV or JSON
        out: Output path (parent directories are created)
        metadata: Run metadata, recorded in JSON output only
    """
    text = render_table(header, rows, fmt, metadata)
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {len(rows)} rows to {out}")


def extension(fmt: OutputFormat) -> str:
    return ".json" if fmt == OutputFormat.JSON else ".csv"

