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
"""Dense-matrix oracles for the kick decomposition and U^n = U_A^n U_B^n V_n ... V_1."""

import logging
from typing import Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from interaction.chain import Block, ChainConfig
from interaction.layers import Layer, gate_layers
from interaction.operators import interaction_operators
from pauli.strings import PauliString, to_matrix
from utils.limits import MATRIX_SITE_LIMIT, check_limit

logger = logging.getLogger(__name__)


def _product_matrix(dimension: int, layers: Sequence[Layer]) -> np.ndarray:
    matrix = np.eye(dimension, dtype=complex)
    for layer in layers:
        for rotation in layer:
            matrix = matrix @ rotation.to_matrix()
    return matrix


def floquet_matrix(cfg: ChainConfig) -> np.ndarray:
    """Dense U = X_AB X_AA X_BB Z_A Z_B assembled from the gate layers."""
    check_limit("matrix sites", cfg.length, MATRIX_SITE_LIMIT)
    return _product_matrix(2**cfg.length, gate_layers(cfg).product_order())


def block_unitary_matrix(cfg: ChainConfig, block: Block) -> np.ndarray:
    """Dense U_A = X_AA Z_A or U_B = X_BB Z_B on the full chain."""
    check_limit("matrix sites", cfg.length, MATRIX_SITE_LIMIT)
    return _product_matrix(2**cfg.length, gate_layers(cfg).block_product(block))


def hamiltonian_terms(cfg: ChainConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Dense sums sum_bonds X_i X_j and sum_sites Z_j."""
    check_limit("matrix sites", cfg.length, MATRIX_SITE_LIMIT)
    dimension = 2**cfg.length
    h_xx = np.zeros((dimension, dimension), dtype=complex)
    h_z = np.zeros((dimension, dimension), dtype=complex)
    for i, j in cfg.bonds():
        h_xx += to_matrix(PauliString.from_sites(cfg.length, {i: "X", j: "X"}))
    for site in range(1, cfg.length + 1):
        h_z += to_matrix(PauliString.from_sites(cfg.length, {site: "Z"}))
    return h_xx, h_z


def floquet_operator_oracle(cfg: ChainConfig) -> np.ndarray:
    """U = exp(-i pi/4 H_XX) exp(-i pi/4 H_Z) by matrix exponentials of the Hamiltonian."""
    h_xx, h_z = hamiltonian_terms(cfg)
    return expm(-0.25j * np.pi * h_xx) @ expm(-0.25j * np.pi * h_z)


def verify_gate_layers(cfg: ChainConfig) -> float:
    """Max-entry difference between the gate-layer product and the Hamiltonian oracle."""
    residual = float(np.max(np.abs(floquet_matrix(cfg) - floquet_operator_oracle(cfg))))
    logger.debug(f"Gate-layer residual for L={cfg.length} {cfg.boundary.value}: {residual:.3e}")
    return residual


def verify_factorization(n: int, cfg: ChainConfig) -> float:
    """
    Check U^n = U_A^n U_B^n V_n ... V_1 with dense matrices.

    Args:
        n: Number of kicks, n >= 0
        cfg: Chain configuration

    Returns:
        Max-entry difference between the two sides

    Raises:
        ResourceLimitError: If L exceeds the small-L matrix cap
    """
    check_limit("matrix sites", cfg.length, MATRIX_SITE_LIMIT)
    dimension = 2**cfg.length
    lhs = np.linalg.matrix_power(floquet_matrix(cfg), n)

    ladder = np.eye(dimension, dtype=complex)
    for operator in interaction_operators(n, cfg):
        for rotation in operator.factors:
            ladder = rotation.to_matrix() @ ladder

    u_a = np.linalg.matrix_power(block_unitary_matrix(cfg, Block.A), n)
    u_b = np.linalg.matrix_power(block_unitary_matrix(cfg, Block.B), n)
    residual = float(np.max(np.abs(lhs - u_a @ u_b @ ladder)))
    logger.debug(f"Factorization residual n={n}, L={cfg.length}: {residual:.3e}")
    return residual
