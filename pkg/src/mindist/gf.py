# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Exact arithmetic in the finite fields F_q for prime powers q <= 16.

Elements are plain integers in ``[0, q)``.  For an extension field
``q = p^t`` the index is the base-``p`` digit vector of the residue
polynomial, lowest degree first, so the class of ``x`` is the index ``p``.
Index 0 is the additive identity and index 1 the multiplicative identity.

Every :class:`FieldSpec` precomputes full ``q x q`` addition and
multiplication tables.  All operations accept either Python ints or
numpy integer arrays and index straight into those tables, which is what
lets :mod:`mindist.linalg` stay loop-free over elements.
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TypeAlias, overload

import numpy as np
import numpy.typing as npt

from .errors import DivisionByZero, NotPrimePower

logger = logging.getLogger(__name__)

Element: TypeAlias = int
ElementArray: TypeAlias = npt.NDArray[np.uint8]

MAX_ORDER = 16

# Fixed Conway polynomials, coefficients lowest degree first, monic.
# The same q always maps to the same modulus so files stay portable.
CONWAY_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 2, 1),  # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
}

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, t)`` with ``q = p^t``, or raise :class:`NotPrimePower`."""
    if q < 2 or q > MAX_ORDER:
        raise NotPrimePower(f"q={q} is outside the supported range [2, {MAX_ORDER}]")
    for p in range(2, q + 1):
        if q % p == 0:
            t = 0
            rest = q
            while rest % p == 0:
                rest //= p
                t += 1
            if rest != 1:
                raise NotPrimePower(f"q={q} has at least two distinct prime factors")
            return p, t
    raise NotPrimePower(f"q={q} is not a prime power")  # pragma: no cover


# -----------------------------------------------------------------------------
# Polynomial helpers over F_p (only used while building tables)
# -----------------------------------------------------------------------------


def _poly_mod(a: list[int], modulus: Sequence[int], p: int) -> list[int]:
    """Reduce ``a`` modulo a monic ``modulus`` over F_p."""
    a = list(a)
    deg = len(modulus) - 1
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i] % p
        if c:
            for j in range(deg + 1):
                a[i - deg + j] = (a[i - deg + j] - c * modulus[j]) % p
    return [c % p for c in a[:deg]] + [0] * max(0, deg - len(a))


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _divides(divisor: Sequence[int], poly: Sequence[int], p: int) -> bool:
    """True if the monic ``divisor`` divides ``poly`` over F_p."""
    return not any(_poly_mod(list(poly), divisor, p))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial-factor a monic polynomial over F_p against all monic divisors."""
    t = len(modulus) - 1
    for deg in range(1, t // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if _divides([*low, 1], modulus, p):
                return False
    return True


def _digits(index: int, p: int, t: int) -> list[int]:
    return [(index // p**i) % p for i in range(t)]


def _index(digits: Sequence[int], p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(digits))


# -----------------------------------------------------------------------------
# FieldSpec
# -----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_q with its fixed modulus and lookup tables.

    Immutable and safe to share across worker threads.  Use
    :func:`field_make` rather than constructing directly so every caller
    shares the canonical instance.
    """

    q: int
    p: int
    t: int
    modulus: tuple[int, ...]
    add_table: ElementArray = field(repr=False)
    mul_table: ElementArray = field(repr=False)
    neg_table: ElementArray = field(repr=False)
    inv_table: ElementArray = field(repr=False)
    pow_table: ElementArray = field(repr=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.q))

    def __str__(self) -> str:
        return f"F_{self.q}"

    @property
    def is_prime(self) -> bool:
        return self.t == 1

    @property
    def sub_table(self) -> ElementArray:
        return self.add_table[:, self.neg_table]

    def elements(self) -> range:
        return range(self.q)

    # -------------------------------------------------------------------------
    # Arithmetic (ints in, int out; arrays in, array out)
    # -------------------------------------------------------------------------

    @overload
    def add(self, a: int, b: int) -> int: ...
    @overload
    def add(self, a: npt.ArrayLike, b: npt.ArrayLike) -> ElementArray: ...

    def add(self, a: npt.ArrayLike, b: npt.ArrayLike) -> int | ElementArray:
        return _out(self.add_table[a, b])

    @overload
    def sub(self, a: int, b: int) -> int: ...
    @overload
    def sub(self, a: npt.ArrayLike, b: npt.ArrayLike) -> ElementArray: ...

    def sub(self, a: npt.ArrayLike, b: npt.ArrayLike) -> int | ElementArray:
        return _out(self.add_table[a, self.neg_table[b]])

    @overload
    def mul(self, a: int, b: int) -> int: ...
    @overload
    def mul(self, a: npt.ArrayLike, b: npt.ArrayLike) -> ElementArray: ...

    def mul(self, a: npt.ArrayLike, b: npt.ArrayLike) -> int | ElementArray:
        return _out(self.mul_table[a, b])

    @overload
    def neg(self, a: int) -> int: ...
    @overload
    def neg(self, a: npt.ArrayLike) -> ElementArray: ...

    def neg(self, a: npt.ArrayLike) -> int | ElementArray:
        return _out(self.neg_table[a])

    @overload
    def inv(self, a: int) -> int: ...
    @overload
    def inv(self, a: npt.ArrayLike) -> ElementArray: ...

    def inv(self, a: npt.ArrayLike) -> int | ElementArray:
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero(f"inverse of 0 in {self}")
        return _out(self.inv_table[a])

    def div(self, a: npt.ArrayLike, b: npt.ArrayLike) -> int | ElementArray:
        return self.mul(a, self.inv(b))

    @overload
    def pow(self, a: int, e: int) -> int: ...
    @overload
    def pow(self, a: npt.ArrayLike, e: int) -> ElementArray: ...

    def pow(self, a: npt.ArrayLike, e: int) -> int | ElementArray:
        """Raise ``a`` to the non-negative integer power ``e`` (``0^0 = 1``)."""
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return _out(self.pow_table[a, self.reduce_exponent(e)])

    def reduce_exponent(self, e: int) -> int:
        """Map ``e >= 0`` to an exponent in ``[0, q-1]`` with the same power map.

        ``x^e = x^(((e - 1) mod (q - 1)) + 1)`` for ``e >= 1`` holds for every
        x including 0, and exponent 0 is kept so that ``0^0 = 1``.
        """
        if e == 0:
            return 0
        return (e - 1) % (self.q - 1) + 1

    def scale(self, c: int, v: npt.ArrayLike) -> ElementArray:
        """Multiply every entry of ``v`` by the scalar ``c``."""
        return self.mul_table[c][np.asarray(v)]

    def dot(self, a: npt.ArrayLike, b: npt.ArrayLike) -> int:
        """Inner product of two equal-length vectors."""
        prods = self.mul_table[np.asarray(a), np.asarray(b)]
        return int(self.sum(prods))

    def sum(self, a: npt.ArrayLike, axis: int | None = None) -> int | ElementArray:
        """Field sum of the entries of ``a`` (along ``axis`` if given)."""
        arr = np.asarray(a, dtype=np.uint8)
        if self.is_prime:
            total = arr.astype(np.int64).sum(axis=axis) % self.p
            return _out(total.astype(np.uint8) if isinstance(total, np.ndarray) else total)
        if axis is None:
            arr = arr.reshape(-1)
            axis = 0
        arr = np.moveaxis(arr, axis, 0)
        acc = np.zeros(arr.shape[1:], dtype=np.uint8)
        for row in arr:
            acc = self.add_table[acc, row]
        return _out(acc)


def _out(value: npt.NDArray[np.uint8] | np.integer | int) -> int | ElementArray:
    if np.ndim(value) == 0:
        return int(value)
    return np.asarray(value, dtype=np.uint8)


def _build_tables(p: int, t: int, modulus: tuple[int, ...]) -> dict[str, ElementArray]:
    q = p**t
    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    if t == 1:
        idx = np.arange(q)
        add[:, :] = (idx[:, None] + idx[None, :]) % p
        mul[:, :] = (idx[:, None] * idx[None, :]) % p
    else:
        digits = [_digits(i, p, t) for i in range(q)]
        for a in range(q):
            for b in range(q):
                add[a, b] = _index([(x + y) % p for x, y in zip(digits[a], digits[b], strict=True)], p)
                prod = _poly_mod(_poly_mul(digits[a], digits[b], p), modulus, p)
                mul[a, b] = _index(prod, p)

    neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)], dtype=np.uint8)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

    power = np.zeros((q, q), dtype=np.uint8)
    power[:, 0] = 1
    for e in range(1, q):
        power[:, e] = mul[power[:, e - 1], np.arange(q)]

    tables = {"add_table": add, "mul_table": mul, "neg_table": neg,
              "inv_table": inv, "pow_table": power}
    for arr in tables.values():
        arr.setflags(write=False)
    return tables


@functools.lru_cache(maxsize=None)
def field_make(q: int) -> FieldSpec:
    """Return the canonical :class:`FieldSpec` for ``q``.

    Raises:
        NotPrimePower: If ``q`` is not a prime power in ``[2, 16]``.
    """
    p, t = _factor_prime_power(q)
    modulus: tuple[int, ...] = ()
    if t > 1:
        modulus = CONWAY_MODULI[q]
        if not is_irreducible(modulus, p):
            raise NotPrimePower(f"fixed modulus for q={q} is reducible")  # pragma: no cover
    logger.debug("Building tables for F_%d (p=%d, t=%d)", q, p, t)
    return FieldSpec(q=q, p=p, t=t, modulus=modulus, **_build_tables(p, t, modulus))


def generator(F: FieldSpec) -> int:
    """Smallest-index element whose powers enumerate all nonzero elements."""
    for g in range(1, F.q):
        seen = {F.pow(g, i) for i in range(F.q - 1)}
        if len(seen) == F.q - 1:
            return g
    raise AssertionError(f"{F} has no generator")  # pragma: no cover


def power_sum(F: FieldSpec, a: int) -> int:
    """Return the field sum of ``x^a`` over all ``x`` in F_q (``0^0 = 1``)."""
    if not 0 <= a <= F.q - 1:
        raise ValueError(f"exponent {a} outside [0, {F.q - 1}]")
    return int(F.sum(F.pow(np.arange(F.q), a)))


def xor_rows(a: npt.NDArray[np.uint8], b: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
    """Word-level F_2 addition of packed bit rows."""
    return np.bitwise_xor(a, b)


def pack_rows(bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
    """Pack a 0/1 matrix row-wise into bytes (most significant bit first)."""
    return np.packbits(np.asarray(bits, dtype=np.uint8), axis=-1)


def unpack_rows(packed: npt.NDArray[np.uint8], width: int) -> npt.NDArray[np.uint8]:
    return np.unpackbits(packed, axis=-1, count=width)
