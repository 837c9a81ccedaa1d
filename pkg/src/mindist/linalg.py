# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Dense vectors and matrices over F_q.

:class:`FMatrix` and :class:`FVector` wrap read-only ``uint8`` numpy
arrays together with the :class:`~mindist.gf.FieldSpec` they live in.
Every operation is pure and returns new objects, so matrices can be
shared freely between worker threads.

Pivoting is deterministic (leftmost column, topmost row) and nullspace
bases are the standard free-variable vectors in ascending free-column
order, so a construction built twice is byte-identical.  Over F_2,
elimination runs on bit-packed rows with word-level XOR.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    Inconsistent,
    RankDeficient,
)
from .gf import FieldSpec, pack_rows, unpack_rows, xor_rows

logger = logging.getLogger(__name__)

Array = npt.NDArray[np.uint8]


def _frozen(data: npt.ArrayLike, ndim: int, field: FieldSpec) -> Array:
    arr = np.array(data, dtype=np.int64)
    if arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-d array, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= field.q):
        raise ValueError(f"entries outside [0, {field.q}) for {field}")
    out = arr.astype(np.uint8)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class FVector:
    """A point of F_q^n."""

    field: FieldSpec
    entries: Array

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(self.entries, 1, self.field))

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    def __iter__(self) -> Iterator[int]:
        return (int(x) for x in self.entries)

    def __getitem__(self, i: int) -> int:
        return int(self.entries[i])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FVector)
            and other.field == self.field
            and np.array_equal(other.entries, self.entries)
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"FVector({self.field}, {self.entries.tolist()})"

    @property
    def weight(self) -> int:
        """Hamming weight."""
        return int(np.count_nonzero(self.entries))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.entries)]

    def __add__(self, other: FVector) -> FVector:
        _check_same_field(self.field, other.field)
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)} differ")
        return FVector(self.field, self.field.add(self.entries, other.entries))

    def __sub__(self, other: FVector) -> FVector:
        _check_same_field(self.field, other.field)
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)} differ")
        return FVector(self.field, self.field.sub(self.entries, other.entries))

    def scaled(self, c: int) -> FVector:
        return FVector(self.field, self.field.scale(c, self.entries))

    def dot(self, other: FVector) -> int:
        _check_same_field(self.field, other.field)
        return self.field.dot(self.entries, other.entries)

    @classmethod
    def zeros(cls, field: FieldSpec, n: int) -> FVector:
        return cls(field, np.zeros(n, dtype=np.uint8))


@dataclass(frozen=True, eq=False)
class FMatrix:
    """A ``rows x cols`` matrix over F_q stored row-major."""

    field: FieldSpec
    entries: Array

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(self.entries, 2, self.field))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FMatrix)
            and other.field == self.field
            and other.shape == self.shape
            and np.array_equal(other.entries, self.entries)
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"FMatrix({self.field}, {self.rows}x{self.cols})"

    def row(self, i: int) -> FVector:
        return FVector(self.field, self.entries[i])

    def row_vectors(self) -> list[FVector]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self, idx: Sequence[int] | npt.NDArray[np.intp]) -> FMatrix:
        """Submatrix keeping the given columns in the given order."""
        return FMatrix(self.field, self.entries[:, np.asarray(idx, dtype=np.intp)])

    def select_rows(self, idx: Sequence[int] | npt.NDArray[np.intp]) -> FMatrix:
        return FMatrix(self.field, self.entries[np.asarray(idx, dtype=np.intp), :])

    @property
    def T(self) -> FMatrix:
        return transpose(self)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int] | FVector],
                  cols: int | None = None) -> FMatrix:
        data = [list(r) for r in rows]
        if not data:
            return cls(field, np.zeros((0, cols or 0), dtype=np.uint8))
        return cls(field, np.array(data, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> FMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FMatrix:
        return cls(field, np.eye(n, dtype=np.uint8))


class RREF(NamedTuple):
    """Result of :func:`rref`."""

    matrix: FMatrix
    pivots: tuple[int, ...]
    rank: int


def _check_same_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatch(f"{a} and {b} differ")


# =============================================================================
# Elimination
# =============================================================================


def _rref_gf2(A: Array) -> tuple[Array, list[int]]:
    rows, cols = A.shape
    P = pack_rows(A).copy()
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        byte, shift = c >> 3, 7 - (c & 7)
        col_bits = (P[:, byte] >> shift) & 1
        nz = np.flatnonzero(col_bits[r:])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            P[[r, piv]] = P[[piv, r]]
            col_bits[[r, piv]] = col_bits[[piv, r]]
        mask = col_bits.astype(bool)
        mask[r] = False
        if mask.any():
            # The pivot row is zero left of column c.
            P[mask, byte:] = xor_rows(P[mask, byte:], P[r, byte:])
        pivots.append(c)
        r += 1
    return unpack_rows(P, cols).astype(np.uint8), pivots


def _rref_prime(F: FieldSpec, A: Array) -> tuple[Array, list[int]]:
    p = F.p
    W = A.astype(np.int32)
    rows, cols = W.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(W[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            W[[r, piv]] = W[[piv, r]]
        W[r, c:] = (W[r, c:] * int(F.inv_table[W[r, c]])) % p
        factors = W[:, c].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            W[mask, c:] = (W[mask, c:] - factors[mask, None] * W[r, c:]) % p
        pivots.append(c)
        r += 1
    return W.astype(np.uint8), pivots


def _rref_general(F: FieldSpec, A: Array) -> tuple[Array, list[int]]:
    A = A.copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, c:] = F.mul_table[F.inv_table[A[r, c]]][A[r, c:]]
        factors = A[:, c].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            # row <- row - factor * pivot_row
            prod = F.mul_table[factors[mask][:, None], A[r, c:][None, :]]
            A[mask, c:] = F.add_table[A[mask, c:], F.neg_table[prod]]
        pivots.append(c)
        r += 1
    return A, pivots


def _rref_array(F: FieldSpec, A: Array) -> tuple[Array, list[int]]:
    if A.size == 0:
        return A.copy(), []
    if F.q == 2:
        return _rref_gf2(A)
    if F.is_prime:
        return _rref_prime(F, A)
    return _rref_general(F, A)


def rref(M: FMatrix) -> RREF:
    """Reduced row echelon form with leftmost-column, topmost-row pivoting."""
    R, pivots = _rref_array(M.field, M.entries)
    logger.debug("rref %dx%d over %s: rank %d", M.rows, M.cols, M.field, len(pivots))
    return RREF(FMatrix(M.field, R), tuple(pivots), len(pivots))


def rank(M: FMatrix) -> int:
    return rref(M).rank


def nullspace_matrix(M: FMatrix) -> FMatrix:
    """Nullspace basis as the rows of a ``(cols - rank) x cols`` matrix."""
    F = M.field
    R, pivots = _rref_array(F, M.entries)
    cols = M.cols
    pivot_set = set(pivots)
    free = np.array([c for c in range(cols) if c not in pivot_set], dtype=np.intp)
    B = np.zeros((free.size, cols), dtype=np.uint8)
    if free.size:
        B[np.arange(free.size), free] = 1
        if pivots:
            B[:, np.asarray(pivots, dtype=np.intp)] = F.neg_table[R[: len(pivots)][:, free].T]
    return FMatrix(F, B)


def nullspace_basis(M: FMatrix) -> list[FVector]:
    """Basis of ``{x : Mx = 0}`` of size ``cols - rank``.

    The i-th vector has a 1 at the i-th free column, 0 at every other free
    column, and the pivot entries forced by the reduced system.
    """
    return nullspace_matrix(M).row_vectors()


def solve(M: FMatrix, b: FVector) -> FVector:
    """One particular solution of ``Mx = b`` with free variables set to 0.

    Raises:
        DimensionMismatch: If ``len(b) != M.rows``.
        Inconsistent: If the system has no solution.
    """
    _check_same_field(M.field, b.field)
    if len(b) != M.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {M.rows}")
    F = M.field
    aug = np.concatenate([M.entries, b.entries[:, None]], axis=1)
    R, pivots = _rref_array(F, aug)
    if pivots and pivots[-1] == M.cols:
        raise Inconsistent(f"system of {M.rows} equations in {M.cols} unknowns has no solution")
    x = np.zeros(M.cols, dtype=np.uint8)
    for i, c in enumerate(pivots):
        x[c] = R[i, -1]
    return FVector(F, x)


def inverse(M: FMatrix) -> FMatrix:
    """Inverse of a square matrix.

    Raises:
        RankDeficient: If ``M`` is singular.
    """
    if M.rows != M.cols:
        raise DimensionMismatch(f"inverse of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    aug = np.concatenate([M.entries, np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = _rref_array(M.field, aug)
    if tuple(pivots[:n]) != tuple(range(n)):
        raise RankDeficient(f"{n}x{n} matrix is singular")
    return FMatrix(M.field, R[:, n:])


def left_inverse(M: FMatrix) -> FMatrix:
    """``L`` with ``L @ M = I`` for ``M`` of full column rank.

    The pivot columns of ``rref(M^T)`` pick an information set ``I`` of
    rows of ``M``; ``L`` is ``inverse(M[I])`` scattered onto those columns
    and zero elsewhere.

    Raises:
        RankDeficient: If ``M`` does not have full column rank.
    """
    n = M.cols
    info = rref(transpose(M))
    if info.rank < n:
        raise RankDeficient(f"{M.rows}x{n} matrix has column rank {info.rank} < {n}")
    idx = np.asarray(info.pivots, dtype=np.intp)
    sub_inv = inverse(M.select_rows(idx))
    L = np.zeros((n, M.rows), dtype=np.uint8)
    L[:, idx] = sub_inv.entries
    return FMatrix(M.field, L)


# =============================================================================
# Products
# =============================================================================


def _matmul_array(F: FieldSpec, A: Array, B: Array) -> Array:
    if F.is_prime:
        return ((A.astype(np.int64) @ B.astype(np.int64)) % F.p).astype(np.uint8)
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for k in range(A.shape[1]):
        acc = F.add_table[acc, F.mul_table[A[:, k, None], B[None, k, :]]]
    return acc


def matmul(A: FMatrix, B: FMatrix) -> FMatrix:
    _check_same_field(A.field, B.field)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    return FMatrix(A.field, _matmul_array(A.field, A.entries, B.entries))


def matvec(A: FMatrix, v: FVector) -> FVector:
    _check_same_field(A.field, v.field)
    if A.cols != len(v):
        raise DimensionMismatch(f"cannot apply {A.rows}x{A.cols} to length {len(v)}")
    return FVector(A.field, _matmul_array(A.field, A.entries, v.entries[:, None])[:, 0])


def transpose(M: FMatrix) -> FMatrix:
    return FMatrix(M.field, M.entries.T)


def kronecker(A: FMatrix, B: FMatrix) -> FMatrix:
    """``(A (x) B)[(i1, i2), (j1, j2)] = A[i1, j1] * B[i2, j2]``."""
    _check_same_field(A.field, B.field)
    F = A.field
    prod = F.mul_table[A.entries[:, None, :, None], B.entries[None, :, None, :]]
    return FMatrix(F, prod.reshape(A.rows * B.rows, A.cols * B.cols))


def vstack(*blocks: FMatrix) -> FMatrix:
    F = blocks[0].field
    for b in blocks[1:]:
        _check_same_field(F, b.field)
    return FMatrix(F, np.concatenate([b.entries for b in blocks], axis=0))


def row_space_contains(M: FMatrix, v: FVector) -> bool:
    """True if ``v`` lies in the row space of ``M``."""
    if len(v) != M.cols:
        raise DimensionMismatch(f"vector of length {len(v)} vs {M.cols} columns")
    base = rank(M)
    return rank(vstack(M, FMatrix(M.field, v.entries[None, :]))) == base


def messages(F: FieldSpec, k: int) -> Array:
    """All ``q^k`` messages of length ``k`` in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    grid = np.indices((F.q,) * k, dtype=np.uint8)
    return grid.reshape(k, -1).T.copy()


def span_enumerate(B: FMatrix, budget: int = 1 << 24) -> Array:
    """Every combination of the rows of ``B``, as a ``q^k x cols`` array.

    Rows follow the lexicographic order of the coefficient vectors.

    Raises:
        BudgetExceeded: If ``q^k`` exceeds ``budget``.
    """
    F = B.field
    total = F.q**B.rows
    if total > budget:
        raise BudgetExceeded(
            f"span of {B.rows} vectors over {F} has {total} elements",
            needed=total,
            budget=budget,
        )
    return _matmul_array(F, messages(F, B.rows), B.entries)
