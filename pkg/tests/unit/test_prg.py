# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for evaluation sets and their fooling verifiers."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from mindist.errors import SizeOverflow, TooLarge, UsageError
from mindist.gf import FieldSpec, field_make
from mindist.prg import (
    EvaluationSet,
    ExtensionField,
    exhaustive_set,
    monomial_matrix,
    monomials,
    polynomial_values,
    schwartz_zippel_bound,
    small_bias_degree,
    small_bias_set,
    verify_fooling,
    verify_nonzero_fraction,
    viola_sum,
)


class TestMonomials:
    def test_degree_one_lists_variables_in_order(self, F3: FieldSpec):
        assert monomials(F3, 3, 1) == [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_count(self, F3: FieldSpec):
        # exponents <= 2 in two variables with total degree <= 2
        assert len(monomials(F3, 2, 2)) == 6
        assert len(monomials(F3, 2, 4)) == 9

    def test_min_degree(self, F2: FieldSpec):
        assert monomials(F2, 2, 2, min_degree=2) == [(1, 1)]

    def test_matrix_and_values(self, F3: FieldSpec):
        U = exhaustive_set(F3, 1)
        E = monomial_matrix(F3, U.points, [(0,), (1,), (2,)])
        assert E.tolist() == [[1, 1, 1], [0, 1, 2], [0, 1, 1]]
        # 1 + x^2
        assert polynomial_values(U, [1, 0, 1], [(0,), (1,), (2,)]).tolist() == [1, 2, 2]


class TestConstructions:
    def test_exhaustive_set(self, F3: FieldSpec):
        U = exhaustive_set(F3, 2)
        assert len(U) == 9
        assert U.provenance == "exhaustive"

    def test_exhaustive_limit(self, F2: FieldSpec):
        with pytest.raises(TooLarge):
            exhaustive_set(F2, 21)

    def test_points_validated(self, F2: FieldSpec):
        with pytest.raises(UsageError):
            EvaluationSet(F2, 2, np.array([[0, 2]]))

    def test_small_bias_degree(self, F2: FieldSpec):
        assert small_bias_degree(F2, 4, 0.5) == 4
        with pytest.raises(UsageError):
            small_bias_degree(F2, 4, 0.0)

    def test_small_bias_size(self, F2: FieldSpec):
        R = small_bias_set(F2, 4, 0.5)
        assert len(R) == 256
        assert R.n == 4
        assert "small-bias" in R.provenance

    def test_viola_sum_size(self, F2: FieldSpec):
        base = small_bias_set(F2, 2, 1.0)
        assert len(viola_sum(base, 2)) == len(base) ** 2

    def test_viola_sum_overflow(self, F2: FieldSpec):
        base = small_bias_set(F2, 4, 0.5)
        with pytest.raises(SizeOverflow):
            viola_sum(base, 4)

    def test_extension_field_multiplication(self, F3: FieldSpec):
        E = ExtensionField(F3, 2)
        elems = np.arange(E.order)
        # every nonzero element has an inverse
        products = E.mul(elems[1:, None], elems[None, 1:])
        assert all(1 in row for row in products.tolist())


class TestFooling:
    @pytest.mark.parametrize(("q", "n"), [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)])
    def test_uniform_set_fools_everything(self, q: int, n: int):
        F = field_make(q)
        report = verify_fooling(exhaustive_set(F, n), q - 1)
        assert report.epsilon_measured == 0
        assert report.mode == "exhaustive"

    def test_small_bias_fools_linear_forms(self, F2: FieldSpec):
        report = verify_fooling(small_bias_set(F2, 4, 0.5), 1)
        assert report.epsilon_measured <= Fraction(1, 2)
        assert report.polynomials_tested == 2**5

    def test_sum_no_worse_than_base(self, F2: FieldSpec):
        base = small_bias_set(F2, 2, 1.0)
        base_eps = verify_fooling(base, 1).epsilon_measured
        assert verify_fooling(viola_sum(base, 2), 1).epsilon_measured <= base_eps

    def test_sampled_mode_is_reproducible(self, F3: FieldSpec):
        R = small_bias_set(F3, 2, 0.5)
        a = verify_fooling(R, 2, samples=200, seed=5)
        b = verify_fooling(R, 2, samples=200, seed=5)
        assert a.mode == "sampled"
        assert a.epsilon_measured == b.epsilon_measured
        assert a.witness == b.witness


class TestNonzeroFraction:
    @pytest.mark.parametrize("e", [0, 1, 2])
    def test_uniform_set_meets_the_bound_exactly(self, F3: FieldSpec, e: int):
        report = verify_nonzero_fraction(exhaustive_set(F3, 2), e)
        assert report.minimum == 1 - Fraction(e, 3)
        assert report.minimum == schwartz_zippel_bound(F3, e)

    def test_degenerate_set_can_reach_zero(self, F3: FieldSpec):
        R = EvaluationSet(F3, 1, np.array([[0], [0]]))
        assert verify_nonzero_fraction(R, 1).minimum == 0
