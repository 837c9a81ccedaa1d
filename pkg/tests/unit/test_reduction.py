# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for the three constructions, their bounds and diagnostics."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mindist.codes import LinearCode, hamming_code, simplex_code
from mindist.csp import Assignment, contradiction, opt_exact, satisfied_count
from mindist.distance import min_distance_exact, ncp_min_weight
from mindist.errors import (
    DimensionMismatch,
    FieldMismatch,
    NotSatisfying,
    RedirectError,
    SizeOverflow,
    UsageError,
)
from mindist.gf import field_make
from mindist.linalg import FMatrix
from mindist.prg import exhaustive_set
from mindist.reduction import (
    auto_r,
    build_mindist2,
    build_mindistq,
    build_ncp2,
    case1_structure,
    case_split_floor,
    check_f2_inverse_formulas,
    check_invertibility,
    choose_r,
    distance_gap,
    intended_codeword,
    tensor_boost,
)
from mindist.reduction.artifact import mindist2_bounds, mindistq_bounds

from conftest import instance


class TestParameters:
    def test_choose_r_binary(self):
        # 49 / (2 * 5/3 * 3) = 4.9
        assert choose_r(7, 3, 2, Fraction(1, 3)) == 5

    def test_choose_r_fq(self):
        # 81 / (2 * 3 * 2) = 6.75
        assert choose_r(9, 2, 3, 1) == 7

    def test_choose_r_is_at_least_one(self):
        assert choose_r(1, 100, 3, 1) == 1

    @pytest.mark.parametrize("delta", [0, Fraction(3, 2)])
    def test_choose_r_needs_a_gap(self, delta: Fraction):
        with pytest.raises(UsageError):
            choose_r(7, 3, 2, delta)

    def test_auto_r_falls_back_to_full_gap(self):
        psi = instance("planted3")
        assert auto_r(psi, 7, 2, Fraction(0)) == choose_r(7, 3, 2, 1)
        assert auto_r(psi, 7, 2, None) == choose_r(7, 3, 2, 1)

    def test_distance_gap_of_simplex(self):
        assert distance_gap(simplex_code(3)) == Fraction(1, 14)

    def test_tensor_boost(self):
        assert tensor_boost(hamming_code(3), 0) == hamming_code(3)
        boosted = tensor_boost(hamming_code(3), 1)
        assert (boosted.n, boosted.k) == (49, 16)
        with pytest.raises(SizeOverflow):
            tensor_boost(hamming_code(3), 3)


class TestBounds:
    def test_mindist2_branches(self):
        eps = Fraction(1, 14)
        b = mindist2_bounds(7, 3, 1, Fraction(0), eps)
        assert b.completeness_weight == 52
        assert b.soundness_floor == Fraction(63, 2)
        assert b.active_branch == "structure"
        small = mindist2_bounds(7, 1, 1, Fraction(0), Fraction(0))
        assert small.active_branch == "assignment"

    def test_mindistq_floor(self):
        b = mindistq_bounds(9, 2, 7, 3, Fraction(1))
        assert b.completeness_weight == 81 + 14
        # min(81 + 2 * 14, 4/3 * 81)
        assert b.soundness_floor == 108
        assert b.active_branch == "structure"

    def test_unknown_delta_has_no_floor(self):
        assert mindistq_bounds(9, 2, 7, 3, None).soundness_floor is None


# =============================================================================
# Nearest codeword over F_2
# =============================================================================


class TestNcp2:
    def test_shape_and_completeness(self):
        psi = instance("planted3")
        _, beta = opt_exact(psi)
        artifact = build_ncp2(psi, delta=Fraction(0))
        assert artifact.output_length == 4 * psi.m
        assert artifact.injective
        assert intended_codeword(artifact, beta).weight == psi.m

    @pytest.mark.parametrize("name", ["half", "contradiction", "contradiction3", "planted2"])
    def test_minimum_weight_counts_unsatisfied_constraints(self, name: str):
        psi = instance(name)
        opt, _ = opt_exact(psi)
        unsatisfied = psi.m - int(opt * psi.m)
        artifact = build_ncp2(psi, delta=1 - opt)
        assert ncp_min_weight(artifact.affine).distance == psi.m + 2 * unsatisfied

    def test_solution_space_is_one_word_per_assignment(self):
        psi = instance("half")
        assert build_ncp2(psi).dimension == psi.n

    def test_unsatisfying_assignment_rejected(self):
        artifact = build_ncp2(contradiction())
        with pytest.raises(NotSatisfying):
            intended_codeword(artifact, Assignment((0,)))

    def test_diagnostics(self):
        artifact = build_ncp2(instance("planted3"))
        assert check_invertibility(artifact).ok
        assert check_f2_inverse_formulas(artifact).ok
        assert case1_structure(artifact).ok
        with pytest.raises(UsageError):
            case_split_floor(artifact)


# =============================================================================
# Minimum distance over F_2
# =============================================================================


class TestMindist2:
    def test_completeness(self):
        psi = instance("planted3")
        _, beta = opt_exact(psi)
        artifact = build_mindist2(psi, simplex_code(3), 1, delta=Fraction(0))
        assert artifact.output_length == 4 * 49 + 4 * psi.m
        word = intended_codeword(artifact, beta)
        assert word.weight == 49 + psi.m

    def test_distance_between_floor_and_completeness(self):
        psi = instance("planted3")
        artifact = build_mindist2(psi, simplex_code(3), 1, delta=Fraction(0))
        d = min_distance_exact(artifact.code).distance
        assert artifact.bounds.soundness_floor <= d <= artifact.bounds.completeness_weight

    def test_diagnostics(self):
        artifact = build_mindist2(instance("planted3"), simplex_code(3), 2)
        assert check_invertibility(artifact).ok
        assert check_f2_inverse_formulas(artifact).ok
        assert case1_structure(artifact).ok

    def test_case_split_certificate(self):
        psi = instance("contradiction3")
        delta = Fraction(1, 3)
        r = auto_r(psi, 7, 2, delta)
        artifact = build_mindist2(psi, simplex_code(3), r, delta=delta)
        cert = case_split_floor(artifact)
        assert cert.passed
        assert {c.case for c in cert.cases} == {1, 2, 3}
        assert cert.floor >= 49

    def test_code_dimension_must_match(self):
        with pytest.raises(DimensionMismatch):
            build_mindist2(instance("planted3"), hamming_code(3), 1)

    def test_code_must_be_binary(self):
        F3 = field_make(3)
        C = LinearCode(FMatrix(F3, [[1, 0, 1], [0, 1, 1]]))
        with pytest.raises(FieldMismatch):
            build_mindist2(instance("planted2"), C, 1)


# =============================================================================
# Minimum distance over F_q
# =============================================================================


class TestMindistq:
    @pytest.fixture(scope="class")
    def artifact(self):
        F3 = field_make(3)
        return build_mindistq(instance("planted2"), F3, exhaustive_set(F3, 2), 1, delta=Fraction(0))

    def test_shape(self, artifact):
        assert artifact.params.N == 9
        assert artifact.output_length == 9 * 81 + 4 * 2
        assert artifact.injective

    def test_completeness(self, artifact):
        psi = artifact.psi
        for index in range(2**psi.n):
            beta = Assignment.from_index(index, psi.n)
            if satisfied_count(psi, beta) == psi.m:
                assert intended_codeword(artifact, beta).weight == 81 + 2

    def test_diagnostics(self, artifact):
        assert check_invertibility(artifact).ok
        assert case1_structure(artifact).ok
        with pytest.raises(UsageError):
            check_f2_inverse_formulas(artifact)

    def test_binary_field_is_redirected(self):
        F2 = field_make(2)
        with pytest.raises(RedirectError):
            build_mindistq(instance("planted2"), F2, exhaustive_set(F2, 2), 1)

    def test_evaluation_set_must_match(self):
        F3 = field_make(3)
        with pytest.raises(DimensionMismatch):
            build_mindistq(instance("planted3"), F3, exhaustive_set(F3, 2), 1)
