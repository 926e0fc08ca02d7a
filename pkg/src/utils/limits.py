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
"""Size caps for the exponential-cost code paths."""

import logging

from utils.errors import ResourceLimitError

logger = logging.getLogger(__name__)

# Dense 2^L x 2^L operators (to_matrix, factorization, Hamiltonian oracle)
MATRIX_SITE_LIMIT = 10

# Dense 2^L state vectors
DENSE_SITE_LIMIT = 24

# Retained sites of an explicit reduced density matrix
RDM_SITE_LIMIT = 12


def check_limit(name: str, value: int, limit: int) -> None:
    """
    Refuse work whose size exceeds a cap.

    Args:
        name: Quantity being checked (used in the error message)
        value: Requested size
        limit: Maximum allowed size

    Raises:
        ResourceLimitError: If value exceeds limit
    """
    if value > limit:
        logger.warning(f"Refusing {name}={value}: limit is {limit}")
        raise ResourceLimitError(name, value, limit)
