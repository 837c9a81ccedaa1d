# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for linear codes, their families and derived subcodes."""

from __future__ import annotations

import numpy as np
import pytest

from mindist.codes import (
    AffineSubspace,
    EncodingCode,
    LinearCode,
    componentwise_power,
    fact4_min_union,
    hamming_code,
    homogeneous_linear_code,
    identity_code,
    moment_code,
    moment_exponents,
    polynomial_code,
    random_code,
    repetition_code,
    simplex_code,
    symmetric_subcode,
    symmetric_zero_diag_subcode,
    tensor,
)
from mindist.errors import FieldMismatch, InvariantFailure, RankDeficient
from mindist.gf import FieldSpec, field_make
from mindist.linalg import FMatrix, FVector, matmul, transpose
from mindist.prg import exhaustive_set


class TestLinearCode:
    def test_dependent_rows_rejected(self, F2: FieldSpec):
        with pytest.raises(RankDeficient):
            LinearCode(FMatrix(F2, [[1, 1], [1, 1]]))

    def test_bad_parity_check_rejected(self, F2: FieldSpec):
        with pytest.raises(InvariantFailure):
            LinearCode(FMatrix(F2, [[1, 1, 0]]), H=FMatrix(F2, [[1, 0, 0], [0, 0, 1]]))

    def test_parity_check_annihilates_generator(self, F3: FieldSpec):
        C = random_code(F3, 6, 3, seed=4)
        H = C.parity_check
        assert H.rows == 3
        assert not np.any(matmul(H, transpose(C.G)).entries)

    def test_contains_and_encode(self, F3: FieldSpec):
        C = repetition_code(F3, 4)
        word = C.encode(FVector(F3, [2]))
        assert word == FVector(F3, [2, 2, 2, 2])
        assert C.contains(word)
        assert not C.contains(FVector(F3, [1, 2, 2, 2]))

    def test_from_spanning_reduces_to_basis(self, F2: FieldSpec):
        C = LinearCode.from_spanning(FMatrix(F2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
        assert C.k == 2

    def test_rate_and_relative_distance(self):
        C = hamming_code(3)
        assert C.rate == pytest.approx(4 / 7)
        assert C.relative_distance(3) == pytest.approx(3 / 7)

    def test_random_code_is_deterministic(self, F3: FieldSpec):
        assert random_code(F3, 8, 3, seed=1) == random_code(F3, 8, 3, seed=1)


class TestFamilies:
    def test_simplex_columns(self):
        S = simplex_code(3)
        assert (S.n, S.k) == (7, 3)
        assert S.G.entries[:, 0].tolist() == [0, 0, 1]
        assert S.G.entries[:, -1].tolist() == [1, 1, 1]

    def test_hamming_is_dual_of_simplex(self):
        H = hamming_code(3)
        assert (H.n, H.k) == (7, 4)
        assert not np.any(matmul(simplex_code(3).G, transpose(H.G)).entries)

    def test_identity(self, F4: FieldSpec):
        assert identity_code(F4, 3).k == 3

    def test_polynomial_code_dimension(self, F3: FieldSpec):
        U = exhaustive_set(F3, 2)
        assert polynomial_code(F3, 2, 1, U).k == 3
        assert polynomial_code(F3, 2, 2, U).k == 6

    def test_homogeneous_linear_code_decodes(self, F3: FieldSpec):
        C = homogeneous_linear_code(F3, 2, exhaustive_set(F3, 2))
        assert isinstance(C, EncodingCode)
        message = FVector(F3, [2, 1])
        assert C.decode(C.encode(message)) == message

    def test_componentwise_power(self, F3: FieldSpec):
        assert componentwise_power(FVector(F3, [0, 1, 2]), 2) == FVector(F3, [0, 1, 1])
        assert componentwise_power(FVector(F3, [0, 1, 2]), 0) == FVector(F3, [1, 1, 1])


class TestAffineSubspace:
    def test_membership(self, F2: FieldSpec):
        A = AffineSubspace(repetition_code(F2, 3), FVector(F2, [1, 0, 0]))
        assert A.contains(FVector(F2, [0, 1, 1]))
        assert not A.contains(FVector(F2, [0, 0, 0]))

    def test_equal_cosets_with_different_offsets(self, F2: FieldSpec):
        C = repetition_code(F2, 3)
        assert AffineSubspace(C, FVector(F2, [1, 0, 0])) == AffineSubspace(C, FVector(F2, [0, 1, 1]))

    def test_field_mismatch(self, F2: FieldSpec, F3: FieldSpec):
        with pytest.raises(FieldMismatch):
            AffineSubspace(repetition_code(F2, 3), FVector(F3, [1, 0, 0]))


class TestProductsAndSubcodes:
    def test_tensor_dimensions(self):
        T = tensor(hamming_code(3), simplex_code(3))
        assert (T.n, T.k) == (49, 12)

    def test_tensor_field_mismatch(self, F3: FieldSpec):
        with pytest.raises(FieldMismatch):
            tensor(simplex_code(3), repetition_code(F3, 2))

    def test_symmetric_subcode_dimension(self):
        assert symmetric_subcode(simplex_code(3)).k == 6

    def test_zero_diagonal_subcode_dimension(self):
        sub = symmetric_zero_diag_subcode(simplex_code(3))
        assert sub.k == 3
        square = sub.G.entries.reshape(sub.k, 7, 7)
        assert not np.any(square[:, np.arange(7), np.arange(7)])
        assert np.array_equal(square, square.transpose(0, 2, 1))

    def test_pair_support_of_simplex(self):
        union, pair = fact4_min_union(simplex_code(3))
        assert union == 6
        assert pair is not None

    def test_pair_support_needs_two_dimensions(self, F3: FieldSpec):
        assert fact4_min_union(repetition_code(F3, 3)) == (0, None)


class TestMomentCodes:
    def test_no_moments_is_everything(self, F3: FieldSpec):
        assert moment_code(F3, 0).k == 9

    @pytest.mark.parametrize(("q", "d", "k"), [(3, 2, 6), (3, 4, 1), (2, 2, 1), (2, 1, 3)])
    def test_dimension(self, q: int, d: int, k: int):
        F = field_make(q)
        assert moment_code(F, d).k == k
        assert len(moment_exponents(F, d)) == q * q - k

    def test_top_degree_leaves_constants(self, F3: FieldSpec):
        C = moment_code(F3, 4)
        assert C.contains(FVector(F3, [1] * 9))
