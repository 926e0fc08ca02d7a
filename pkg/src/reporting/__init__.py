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
"""Table and verify-report writers."""

from reporting.json_generator import generate_json_report
from reporting.markdown_generator import generate_markdown_report
from reporting.tables import (
    CONCURRENCE_HEADER,
    ENTROPY_HEADER,
    VN_HEADER,
    render_table,
    write_table,
)

__all__ = [
    "CONCURRENCE_HEADER",
    "ENTROPY_HEADER",
    "VN_HEADER",
    "generate_json_report",
    "generate_markdown_report",
    "render_table",
    "write_table",
]
