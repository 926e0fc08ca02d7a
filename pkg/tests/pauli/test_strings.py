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
"""Tests for Pauli strings, products and commutation."""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pauli.strings import PauliString, commutes, pauli_mul, to_matrix
from utils.errors import ResourceLimitError, StructuralError


def pauli_strings(min_length=1, max_length=10):
    """Random phased strings of a drawn length."""
    return st.integers(min_length, max_length).flatmap(
        lambda n: st.builds(
            PauliString.from_letters,
            st.text(alphabet="IXYZ", min_size=n, max_size=n),
            st.integers(0, 3),
        )
    )


def pauli_pairs(max_length=10):
    """Two random strings on the same number of sites."""
    return st.integers(1, max_length).flatmap(
        lambda n: st.tuples(
            st.builds(
                PauliString.from_letters,
                st.text(alphabet="IXYZ", min_size=n, max_size=n),
                st.integers(0, 3),
            ),
            st.builds(
                PauliString.from_letters,
                st.text(alphabet="IXYZ", min_size=n, max_size=n),
                st.integers(0, 3),
            ),
        )
    )


class TestPauliString:
    """Tests for construction and text forms."""

    def test_from_letters_bits(self):
        """Test site 1 lands in bit 0."""
        p = PauliString.from_letters("XIZY")

        assert p.x_bits == 0b1001
        assert p.z_bits == 0b1100
        assert p.letters == "XIZY"

    def test_parse_and_str(self):
        """Test the phase prefixes survive parsing."""
        for text in ["+XYZ", "+iXYZ", "-XYZ", "-iXYZ"]:
            assert str(PauliString.parse(text)) == text

    def test_parse_without_prefix(self):
        """Test a bare letter word parses with phase +1."""
        assert PauliString.parse("YY").phase == 0

    def test_parse_invalid(self):
        """Test malformed text is rejected."""
        with pytest.raises(StructuralError):
            PauliString.parse("+XQ")

    def test_from_sites(self):
        """Test sparse construction."""
        p = PauliString.from_sites(4, {2: "Y", 3: "Y"})

        assert p.letters == "IYYI"
        assert p.support == (2, 3)
        assert p.weight == 2

    def test_from_sites_out_of_range(self):
        """Test an out-of-range site is rejected."""
        with pytest.raises(StructuralError):
            PauliString.from_sites(3, {4: "X"})

    def test_bits_outside_length(self):
        """Test bits beyond L are rejected."""
        with pytest.raises(StructuralError):
            PauliString(2, x_bits=0b100)

    def test_sign_of_non_hermitian(self):
        """Test a string with phase i has no sign."""
        with pytest.raises(StructuralError):
            _ = PauliString.from_letters("X", 1).sign

    def test_negation(self):
        """Test unary minus flips the sign."""
        assert (-PauliString.parse("+ZZ")).sign == -1


class TestProduct:
    """Tests for the phase-exact product."""

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            ("X", "Y", "+iZ"),
            ("Y", "Z", "+iX"),
            ("Z", "X", "+iY"),
            ("Y", "X", "-iZ"),
            ("Z", "Y", "-iX"),
            ("X", "Z", "-iY"),
            ("X", "X", "+I"),
        ],
    )
    def test_single_site_table(self, a, b, expected):
        """Test the single-qubit multiplication table."""
        result = pauli_mul(PauliString.parse(a), PauliString.parse(b))

        assert str(result) == expected

    def test_length_mismatch(self):
        """Test strings of different lengths cannot be multiplied."""
        with pytest.raises(StructuralError):
            pauli_mul(PauliString.parse("X"), PauliString.parse("XX"))

    def test_exhaustive_small_strings(self):
        """Test every product of phased strings up to 3 sites against matrices."""
        for length in range(1, 4):
            words = ["".join(w) for w in product("IXYZ", repeat=length)]
            strings = [PauliString.from_letters(w, k) for w in words for k in range(4)]
            matrices = {p: to_matrix(p) for p in strings}
            unphased = [p for p in strings if p.phase == 0]
            for p in strings:
                for q in unphased:
                    assert np.allclose(to_matrix(pauli_mul(p, q)), matrices[p] @ matrices[q])

    @settings(max_examples=1000, deadline=None)
    @given(pauli_pairs(max_length=10))
    def test_product_matches_matrix_oracle(self, pair):
        """Test random products up to 10 sites against the matrix oracle."""
        p, q = pair
        assert np.allclose(to_matrix(pauli_mul(p, q)), to_matrix(p) @ to_matrix(q))

    @settings(max_examples=200, deadline=None)
    @given(pauli_pairs(max_length=40))
    def test_associative_phase(self, pair):
        """Test (PQ)P = P(QP) with phases."""
        p, q = pair
        assert pauli_mul(pauli_mul(p, q), p) == pauli_mul(p, pauli_mul(q, p))


class TestCommutes:
    """Tests for the symplectic commutation test."""

    def test_anticommuting_letters(self):
        """Test X and Z anticommute."""
        assert not commutes(PauliString.parse("X"), PauliString.parse("Z"))

    def test_two_anticommuting_sites_commute(self):
        """Test XX and ZZ commute."""
        assert commutes(PauliString.parse("XX"), PauliString.parse("ZZ"))

    @settings(max_examples=500, deadline=None)
    @given(pauli_pairs(max_length=8))
    def test_commutes_matches_matrices(self, pair):
        """Test commutation against PQ = QP on matrices."""
        p, q = pair
        mp, mq = to_matrix(p), to_matrix(q)
        assert commutes(p, q) == np.allclose(mp @ mq, mq @ mp)


class TestToMatrix:
    """Tests for the dense matrix form."""

    def test_site_one_is_leftmost(self):
        """Test X on site 1 flips the most significant basis bit."""
        m = to_matrix(PauliString.parse("XI"))

        assert m[0b10, 0b00] == 1

    def test_phase_applied(self):
        """Test the global phase multiplies the matrix."""
        assert np.allclose(to_matrix(PauliString.parse("-iZ")), -1j * np.diag([1, -1]))

    def test_matrix_cap(self):
        """Test dense matrices are refused beyond the cap."""
        with pytest.raises(ResourceLimitError):
            to_matrix(PauliString.identity(11))

    @settings(max_examples=100, deadline=None)
    @given(pauli_strings(max_length=6))
    def test_hermitian_strings_square_to_identity(self, p):
        """Test P^2 = I for sign-only phases."""
        if p.is_hermitian:
            m = to_matrix(p)
            assert np.allclose(m @ m, np.eye(m.shape[0]))
