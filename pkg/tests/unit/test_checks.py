# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for the brute-force oracles."""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest

from mindist.codes import hamming_code, random_code, repetition_code, simplex_code
from mindist.errors import UsageError
from mindist.gf import SUPPORTED_ORDERS, FieldSpec, field_make
from mindist.prg import EvaluationSet, exhaustive_set, small_bias_set
from mindist.verify.checks import (
    check_fooling,
    check_high_moment_support,
    check_low_moment_support,
    check_nonzero_fraction,
    check_pair_support,
    check_power_sums,
    check_sum_fooling,
    check_symmetric_dimension,
    check_tensor_distance,
    check_zero_diagonal_weight,
    check_zero_fraction,
    high_moment_basis,
)


class TestFieldFacts:
    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_power_sums(self, q: int):
        report = check_power_sums(field_make(q))
        assert report.passed
        assert report.measured == 0
        assert report.id == f"power-sums[q={q}]"

    def test_report_json_uses_pass_key(self, F3: FieldSpec):
        data = json.loads(check_power_sums(F3).to_json())
        assert data["pass"] is True
        assert data["claimed"] == "0"


class TestMomentSupport:
    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_low_degrees(self, q: int):
        F = field_make(q)
        for d in range(q):
            report = check_low_moment_support(F, d)
            assert report.passed, report.id

    def test_low_degree_is_tight_for_q3(self, F3: FieldSpec):
        report = check_low_moment_support(F3, 2)
        assert report.measured == 3
        assert report.witness is not None
        assert np.count_nonzero(report.witness) == 3

    def test_high_degree_top(self, F3: FieldSpec):
        report = check_high_moment_support(F3, 4)
        assert report.passed
        assert report.measured == 9
        assert "monomial span matches" in report.notes

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_high_degrees(self, q: int):
        F = field_make(q)
        for d in range(q - 1, 2 * (q - 1) + 1):
            assert check_high_moment_support(F, d).passed

    def test_high_moment_basis(self, F3: FieldSpec):
        assert high_moment_basis(F3, 3) == [(0, 0), (0, 1), (1, 0)]

    def test_degree_ranges(self, F3: FieldSpec):
        with pytest.raises(UsageError):
            check_low_moment_support(F3, 3)
        with pytest.raises(UsageError):
            check_high_moment_support(F3, 1)

    def test_sampled_fallback(self, F3: FieldSpec):
        report = check_low_moment_support(F3, 0, budget=10, samples=500, seed=1)
        assert report.mode == "sampled"
        assert report.samples == 500
        assert report.passed


class TestCodeFacts:
    def test_zero_diagonal_weight_of_simplex(self):
        report = check_zero_diagonal_weight(simplex_code(3))
        assert report.claimed == 24
        assert report.passed

    def test_pair_support_of_simplex(self):
        report = check_pair_support(simplex_code(3))
        assert (report.claimed, report.measured) == (6, 6)
        assert report.passed

    def test_pair_support_without_pairs(self, F3: FieldSpec):
        report = check_pair_support(repetition_code(F3, 4))
        assert report.passed
        assert report.claimed is None

    def test_tensor_distance(self):
        report = check_tensor_distance(hamming_code(3), hamming_code(3))
        assert report.measured == report.claimed == 9
        assert report.passed

    @pytest.mark.parametrize("code", [simplex_code(3), random_code(field_make(3), 8, 3, 1)])
    def test_symmetric_dimension(self, code):
        report = check_symmetric_dimension(code)
        assert report.measured == code.k * (code.k + 1) // 2
        assert report.passed


# Shapes keep every exhaustive search below 2^16 codewords.
TENSOR_SHAPES = {2: ((7, 4), (6, 3)), 3: ((6, 3), (5, 2)), 4: ((5, 3), (4, 2))}

RANDOM_CODES = [
    (2, 8, 6, 1),
    (2, 8, 5, 2),
    (2, 7, 4, 3),
    (2, 6, 3, 4),
    (2, 9, 5, 5),
    (3, 6, 4, 6),
    (3, 5, 3, 7),
    (3, 7, 4, 8),
    (4, 5, 3, 9),
    (4, 4, 2, 10),
]


class TestRandomCodes:
    @pytest.mark.parametrize("seed", range(7))
    @pytest.mark.parametrize("q", sorted(TENSOR_SHAPES))
    def test_tensor_distance_multiplies(self, q: int, seed: int):
        F = field_make(q)
        (n1, k1), (n2, k2) = TENSOR_SHAPES[q]
        report = check_tensor_distance(random_code(F, n1, k1, seed), random_code(F, n2, k2, seed + 100))
        assert report.relation == "=="
        assert report.measured == report.claimed
        assert report.passed

    @pytest.mark.parametrize(("q", "n", "k", "seed"), RANDOM_CODES)
    def test_pair_support(self, q: int, n: int, k: int, seed: int):
        report = check_pair_support(random_code(field_make(q), n, k, seed))
        assert report.passed, report.notes
        assert report.measured is not None

    @pytest.mark.parametrize(("q", "n", "k", "seed"), RANDOM_CODES)
    def test_zero_diagonal_weight(self, q: int, n: int, k: int, seed: int):
        report = check_zero_diagonal_weight(random_code(field_make(q), n, k, seed))
        assert report.passed, report.notes
        assert report.measured is not None
        assert report.measured >= report.claimed

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("q", [2, 3])
    def test_symmetric_dimension(self, q: int, seed: int):
        code = random_code(field_make(q), 7, 2 + seed % 4, seed)
        report = check_symmetric_dimension(code)
        assert report.measured == code.k * (code.k + 1) // 2
        assert report.passed


# =============================================================================
# Polynomials and evaluation sets
# =============================================================================


class TestPolynomialFacts:
    @pytest.mark.parametrize("d", [0, 1, 2])
    def test_zero_fraction_is_tight(self, F3: FieldSpec, d: int):
        report = check_zero_fraction(F3, 2, d)
        assert report.measured == Fraction(d, 3)
        assert report.passed

    def test_zero_fraction_degree_range(self, F3: FieldSpec):
        with pytest.raises(UsageError):
            check_zero_fraction(F3, 2, 3)

    def test_nonzero_fraction_on_uniform_points(self, F3: FieldSpec):
        report = check_nonzero_fraction(exhaustive_set(F3, 2), 2)
        assert report.claimed == report.measured == Fraction(1, 3)
        assert report.passed

    def test_fooling_passes_on_uniform_points(self, F2: FieldSpec):
        assert check_fooling(exhaustive_set(F2, 3), 1, Fraction(0)).passed

    def test_fooling_failure_is_reported(self, F3: FieldSpec):
        R = EvaluationSet(F3, 1, np.array([[0], [0]]))
        report = check_fooling(R, 1, Fraction(0))
        assert not report.passed
        assert report.measured > 0
        assert report.witness is not None

    def test_fooling_without_claim_records_only(self, F2: FieldSpec):
        report = check_fooling(small_bias_set(F2, 2, 1.0), 2, None)
        assert report.passed
        assert report.claimed is None

    @pytest.mark.parametrize(
        ("q", "n", "base_eps", "sum_eps"),
        [
            (2, 3, Fraction(3, 16), Fraction(9, 256)),
            (2, 4, Fraction(1, 4), Fraction(17, 256)),
            (3, 2, Fraction(8, 27), Fraction(56, 729)),
        ],
    )
    def test_sum_fooling_at_degree_two(
        self, q: int, n: int, base_eps: Fraction, sum_eps: Fraction
    ):
        report = check_sum_fooling(small_bias_set(field_make(q), n, 1.0), 2)
        assert report.relation == "<="
        assert report.claimed == base_eps
        assert report.measured == sum_eps
        assert report.passed
