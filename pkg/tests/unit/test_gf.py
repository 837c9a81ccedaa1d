# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for finite field arithmetic."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mindist.errors import DivisionByZero, NotPrimePower
from mindist.gf import (
    SUPPORTED_ORDERS,
    FieldSpec,
    field_make,
    generator,
    pack_rows,
    power_sum,
    unpack_rows,
    xor_rows,
)


@st.composite
def field_and_elements(draw: st.DrawFn, count: int = 3) -> tuple[FieldSpec, list[int]]:
    F = field_make(draw(st.sampled_from(SUPPORTED_ORDERS)))
    return F, [draw(st.integers(0, F.q - 1)) for _ in range(count)]


# =========================================================================
# Construction
# =========================================================================


class TestFieldMake:
    @pytest.mark.parametrize("q", [1, 6, 10, 12, 17, 32])
    def test_rejects_non_prime_powers(self, q: int):
        with pytest.raises(NotPrimePower):
            field_make(q)

    def test_canonical_instance(self):
        assert field_make(9) is field_make(9)

    @pytest.mark.parametrize("q", [4, 8, 9, 16])
    def test_extension_fields(self, q: int):
        F = field_make(q)
        assert F.p**F.t == q
        assert not F.is_prime

    def test_tables_are_read_only(self, F3: FieldSpec):
        with pytest.raises(ValueError):
            F3.add_table[0, 0] = 1


# =========================================================================
# Axioms
# =========================================================================


class TestAxioms:
    @given(field_and_elements())
    def test_distributive(self, fe: tuple[FieldSpec, list[int]]):
        F, (a, b, c) = fe
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    @given(field_and_elements())
    def test_associative(self, fe: tuple[FieldSpec, list[int]]):
        F, (a, b, c) = fe
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)

    @given(field_and_elements(count=1))
    def test_inverses(self, fe: tuple[FieldSpec, list[int]]):
        F, (a,) = fe
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1

    @given(field_and_elements(count=1), st.integers(0, 40))
    def test_pow_matches_repeated_product(self, fe: tuple[FieldSpec, list[int]], e: int):
        F, (a,) = fe
        expected = 1
        for _ in range(e):
            expected = F.mul(expected, a)
        assert F.pow(a, e) == expected

    def test_zero_to_the_zero_is_one(self, F4: FieldSpec):
        assert F4.pow(0, 0) == 1

    def test_inverse_of_zero(self, F3: FieldSpec):
        with pytest.raises(DivisionByZero):
            F3.inv(0)

    def test_vectorised_ops(self, F3: FieldSpec):
        a = np.array([0, 1, 2])
        assert F3.add(a, a).tolist() == [0, 2, 1]
        assert F3.mul(a, 2).tolist() == [0, 2, 1]
        assert F3.sum(a) == 0


# =========================================================================
# Power sums and generators
# =========================================================================


class TestPowerSums:
    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_low_powers_sum_to_zero(self, q: int):
        F = field_make(q)
        assert all(power_sum(F, a) == 0 for a in range(q - 1))

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_top_power_sums_to_minus_one(self, q: int):
        F = field_make(q)
        assert power_sum(F, q - 1) == F.neg(1)

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_generator_cycles_through_nonzero_elements(self, q: int):
        F = field_make(q)
        g = generator(F)
        assert sorted(F.pow(g, i) for i in range(q - 1)) == list(range(1, q))


class TestPackedRows:
    def test_round_trip(self):
        bits = np.array([[1, 0, 1, 1, 0, 0, 1, 0, 1], [0, 1, 1, 0, 0, 0, 0, 0, 1]], dtype=np.uint8)
        assert np.array_equal(unpack_rows(pack_rows(bits), 9), bits)

    def test_xor_is_addition(self, F2: FieldSpec):
        a = np.array([[1, 0, 1, 1]], dtype=np.uint8)
        b = np.array([[1, 1, 0, 1]], dtype=np.uint8)
        packed = xor_rows(pack_rows(a), pack_rows(b))
        assert unpack_rows(packed, 4).tolist() == F2.add(a, b).tolist()
