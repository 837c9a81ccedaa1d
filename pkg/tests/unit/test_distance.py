# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for exact minimum distance and coset minimum weight."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindist.codes import (
    AffineSubspace,
    LinearCode,
    hamming_code,
    identity_code,
    random_code,
    repetition_code,
    simplex_code,
    tensor,
)
from mindist.distance import min_distance_exact, min_weight_search, ncp_min_weight
from mindist.errors import BudgetExceeded
from mindist.gf import FieldSpec, field_make
from mindist.linalg import FMatrix, FVector, _matmul_array, messages


def brute_force_distance(C: LinearCode) -> int:
    words = _matmul_array(C.field, messages(C.field, C.k), C.G.entries)
    return int(np.count_nonzero(words[1:], axis=1).min())


class TestMinDistance:
    @pytest.mark.parametrize(
        ("code", "expected"),
        [
            (hamming_code(3), 3),
            (simplex_code(3), 4),
            (simplex_code(4), 8),
            (repetition_code(field_make(3), 5), 5),
            (identity_code(field_make(4), 3), 1),
        ],
        ids=["hamming3", "simplex3", "simplex4", "rep5-F3", "identity-F4"],
    )
    def test_known_codes(self, code: LinearCode, expected: int):
        report = min_distance_exact(code)
        assert report.distance == expected
        assert report.witness is not None
        assert report.witness.weight == expected
        assert code.contains(report.witness)
        assert report.enumerated == code.field.q**code.k - 1

    def test_tensor_of_hamming_codes(self):
        assert min_distance_exact(tensor(hamming_code(3), hamming_code(3))).distance == 9

    @settings(max_examples=30, deadline=None)
    @given(
        st.sampled_from([2, 3, 4, 5]),
        st.integers(3, 9),
        st.integers(1, 4),
        st.integers(0, 10_000),
    )
    def test_matches_brute_force(self, q: int, n: int, k: int, seed: int):
        C = random_code(field_make(q), n, min(k, n), seed)
        assert min_distance_exact(C).distance == brute_force_distance(C)

    def test_witness_independent_of_threads(self, F3: FieldSpec):
        C = random_code(F3, 12, 6, seed=3)
        one = min_distance_exact(C, threads=1)
        many = min_distance_exact(C, threads=4)
        assert one.distance == many.distance
        assert one.witness == many.witness

    def test_zero_dimensional_code_is_infinite(self, F2: FieldSpec):
        report = min_weight_search(FMatrix(F2, np.zeros((0, 4), dtype=np.uint8)))
        assert report.is_infinite
        assert report.witness is None

    def test_budget(self, F3: FieldSpec):
        with pytest.raises(BudgetExceeded) as info:
            min_distance_exact(identity_code(F3, 10), budget=1000)
        assert info.value.needed == 3**10
        assert info.value.budget == 1000


class TestNearestCodeword:
    def test_coset_minimum(self, F2: FieldSpec):
        A = AffineSubspace(repetition_code(F2, 3), FVector(F2, [1, 1, 0]))
        report = ncp_min_weight(A)
        assert report.distance == 1
        assert report.witness == FVector(F2, [0, 0, 1])

    def test_zero_offset_includes_zero_word(self, F3: FieldSpec):
        A = AffineSubspace(repetition_code(F3, 3), FVector.zeros(F3, 3))
        assert ncp_min_weight(A).distance == 0
