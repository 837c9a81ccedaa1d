# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Linear codes and affine subspaces over F_q.

A :class:`LinearCode` is given by a generator matrix whose rows form a
basis; the parity-check matrix is derived on demand from the nullspace
of ``G``.  The constructors here cover the families the reductions and
the lemma checks quantify over: simplex, Hamming, repetition, random
codes, polynomial evaluation codes ``P_d`` and the homogeneous linear
encoding code, plus tensor products and their symmetric subcodes.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InvariantFailure,
    RankDeficient,
    UsageError,
)
from .gf import FieldSpec, field_make
from .linalg import (
    Array,
    FMatrix,
    FVector,
    _matmul_array,
    kronecker,
    left_inverse,
    matmul,
    matvec,
    messages,
    nullspace_matrix,
    rank,
    rref,
    transpose,
)
from .prg import EvaluationSet, Monomial, monomial_matrix, monomials

logger = logging.getLogger(__name__)

MAX_SIMPLEX_DIMENSION = 20


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A ``[n, k]`` linear code with a ``k x n`` generator matrix.

    ``H``, when given, must satisfy ``H @ G^T = 0`` with rank ``n - k``;
    otherwise :attr:`parity_check` computes one from the nullspace of
    ``G``.
    """

    G: FMatrix
    H: FMatrix | None = None
    name: str = "C"

    def __post_init__(self) -> None:
        k = rank(self.G)
        if k != self.G.rows:
            raise RankDeficient(
                f"generator of {self.name} has {self.G.rows} rows but rank {k}"
            )
        if self.H is not None:
            if self.H.cols != self.n:
                raise DimensionMismatch(f"parity check has {self.H.cols} columns, code length {self.n}")
            if np.any(matmul(self.H, transpose(self.G)).entries):
                raise InvariantFailure(f"H @ G^T != 0 for {self.name}")
            if rank(self.H) != self.n - self.k:
                raise InvariantFailure(f"parity check of {self.name} has the wrong rank")

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def rate(self) -> float:
        return self.k / self.n if self.n else 0.0

    def __repr__(self) -> str:
        return f"LinearCode({self.name}: [{self.n}, {self.k}] over {self.field})"

    def __eq__(self, other: object) -> bool:
        """Codes are equal when they span the same subspace."""
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            other.field == self.field
            and other.n == self.n
            and other.k == self.k
            and rref(other.G).matrix == rref(self.G).matrix
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.n, self.k))

    @functools.cached_property
    def parity_check(self) -> FMatrix:
        if self.H is not None:
            return self.H
        return nullspace_matrix(self.G)

    def contains(self, v: FVector) -> bool:
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} vs code length {self.n}")
        return not np.any(matvec(self.parity_check, v).entries)

    def encode(self, message: FVector) -> FVector:
        if len(message) != self.k:
            raise DimensionMismatch(f"message of length {len(message)} vs dimension {self.k}")
        return matvec(transpose(self.G), message)

    def codewords(self, budget: int = 1 << 24) -> Array:
        """All ``q^k`` codewords, in lexicographic message order."""
        total = self.field.q**self.k
        if total > budget:
            raise BudgetExceeded(
                f"{self.name} has {total} codewords", needed=total, budget=budget
            )
        return _matmul_array(self.field, messages(self.field, self.k), self.G.entries)

    def relative_distance(self, distance: float) -> float:
        return distance / self.n if self.n else 0.0

    @classmethod
    def from_spanning(cls, M: FMatrix, name: str = "C") -> LinearCode:
        """Code spanned by the rows of ``M`` (reduced to a basis)."""
        red = rref(M)
        return cls(FMatrix(M.field, red.matrix.entries[: red.rank]), name=name)


@dataclass(frozen=True, eq=False)
class EncodingCode(LinearCode):
    """A code together with a decoder ``L`` such that ``L @ G^T = I``."""

    decoder: FMatrix | None = None

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.decoder is None:
            object.__setattr__(self, "decoder", left_inverse(transpose(self.G)))

    def decode(self, word: FVector) -> FVector:
        """Message of a codeword through the stored left inverse."""
        assert self.decoder is not None
        return matvec(self.decoder, word)


@dataclass(frozen=True, eq=False)
class AffineSubspace:
    """The coset ``offset + code``."""

    code: LinearCode
    offset: FVector

    def __post_init__(self) -> None:
        if len(self.offset) != self.code.n:
            raise DimensionMismatch(
                f"offset of length {len(self.offset)} vs code length {self.code.n}"
            )
        if self.offset.field != self.code.field:
            raise FieldMismatch(f"offset over {self.offset.field}, code over {self.code.field}")

    @property
    def field(self) -> FieldSpec:
        return self.code.field

    @property
    def n(self) -> int:
        return self.code.n

    def contains(self, v: FVector) -> bool:
        return self.code.contains(v - self.offset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        return other.code == self.code and self.code.contains(other.offset - self.offset)

    def __hash__(self) -> int:
        return hash(self.code)


# =============================================================================
# Families
# =============================================================================


def identity_code(F: FieldSpec, n: int) -> LinearCode:
    return LinearCode(FMatrix.identity(F, n), name=f"F_{F.q}^{n}")


def repetition_code(F: FieldSpec, n: int) -> LinearCode:
    return LinearCode(FMatrix(F, np.ones((1, n), dtype=np.uint8)), name=f"rep{n}")


def simplex_code(n: int) -> LinearCode:
    """The binary ``[2^n - 1, n]`` simplex code.

    Column ``j - 1`` is the binary expansion of ``j`` with the most
    significant bit in row 0, so columns run through F_2^n \\ {0} in
    lexicographic order.
    """
    if not 1 <= n <= MAX_SIMPLEX_DIMENSION:
        raise UsageError(f"simplex dimension must be in [1, {MAX_SIMPLEX_DIMENSION}], got {n}")
    cols = np.arange(1, 2**n, dtype=np.int64)
    G = ((cols[None, :] >> (n - 1 - np.arange(n)[:, None])) & 1).astype(np.uint8)
    return LinearCode(FMatrix(field_make(2), G), name=f"simplex{n}")


def hamming_code(r: int = 3) -> LinearCode:
    """The binary ``[2^r - 1, 2^r - 1 - r]`` Hamming code, dual of the simplex code."""
    S = simplex_code(r)
    return LinearCode(nullspace_matrix(S.G), H=S.G, name=f"hamming{r}")


def random_code(F: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """A uniformly random ``[n, k]`` code, deterministic in ``seed``."""
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    while True:
        G = FMatrix(F, rng.integers(0, F.q, size=(k, n), dtype=np.uint8))
        if rank(G) == k:
            return LinearCode(G, name=f"random[{n},{k}]@{seed}")


def polynomial_code(F: FieldSpec, n: int, d: int, R: EvaluationSet) -> LinearCode:
    """``P_d``: evaluations on ``R`` of polynomials of total degree ``<= d``.

    Rows are monomial evaluation vectors, constant monomial included.  When
    ``R`` does not separate monomials, only the first independent ones (in
    monomial order) are kept.
    """
    code, _ = polynomial_code_with_monomials(F, n, d, R)
    return code


def polynomial_code_with_monomials(
    F: FieldSpec, n: int, d: int, R: EvaluationSet
) -> tuple[LinearCode, list[Monomial]]:
    if not 0 <= d <= F.q - 1:
        raise UsageError(f"degree {d} outside [0, {F.q - 1}]")
    if R.field != F or R.n != n:
        raise DimensionMismatch(f"evaluation set lives in F_{R.field.q}^{R.n}, not F_{F.q}^{n}")
    monos = monomials(F, n, d)
    E = FMatrix(F, monomial_matrix(F, R.points, monos))
    keep = list(rref(transpose(E)).pivots)
    kept = [monos[i] for i in keep]
    if len(kept) < len(monos):
        logger.debug("P_%d on %d points keeps %d of %d monomials", d, len(R), len(kept), len(monos))
    return LinearCode(E.select_rows(keep), name=f"P{d}"), kept


def homogeneous_linear_code(F: FieldSpec, n: int, R: EvaluationSet) -> EncodingCode:
    """The ``[|R|, n]`` code of linear forms ``x -> sum a_i x_i`` on ``R``.

    Raises:
        RankDeficient: If the coordinate functions are dependent on ``R``.
    """
    if R.field != F or R.n != n:
        raise DimensionMismatch(f"evaluation set lives in F_{R.field.q}^{R.n}, not F_{F.q}^{n}")
    G = FMatrix(F, R.points.T)
    if rank(G) < n:
        raise RankDeficient(
            f"{len(R)} evaluation points do not separate {n} linear forms"
        )
    return EncodingCode(G, name="C")


def componentwise_power(v: FVector, e: int) -> FVector:
    """Raise every entry to the power ``e`` (``0^0 = 1``)."""
    return FVector(v.field, v.field.pow(v.entries, e))


# =============================================================================
# Products and subcodes
# =============================================================================


def tensor(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """``C1 (x) C2``; coordinate ``(i, j)`` is flat index ``i * n2 + j``."""
    if C1.field != C2.field:
        raise FieldMismatch(f"{C1.name} over {C1.field}, {C2.name} over {C2.field}")
    return LinearCode(kronecker(C1.G, C2.G), name=f"({C1.name} x {C2.name})")


def _square_subcode(C: LinearCode, *, zero_diagonal: bool) -> LinearCode:
    F = C.field
    n = C.n
    K = kronecker(C.G, C.G).entries  # row (a, b) -> G[a] (x) G[b]
    rows: list[Array] = []
    for i in range(n):
        for j in range(i + 1, n):
            rows.append(F.sub(K[:, i * n + j], K[:, j * n + i]))
        if zero_diagonal:
            rows.append(K[:, i * n + i])
    if not rows:
        return tensor(C, C)
    cons = FMatrix(F, np.stack(rows))
    U = nullspace_matrix(cons)
    G = _matmul_array(F, U.entries, K) if U.rows else np.zeros((0, n * n), dtype=np.uint8)
    kind = "symzd" if zero_diagonal else "sym"
    return LinearCode(FMatrix(F, G), name=f"{kind}({C.name})")


def symmetric_zero_diag_subcode(C: LinearCode) -> LinearCode:
    """Members of ``C (x) C`` that are symmetric with zero diagonal as ``n x n`` matrices."""
    return _square_subcode(C, zero_diagonal=True)


def symmetric_subcode(C: LinearCode) -> LinearCode:
    """Members of ``C (x) C`` that are symmetric as ``n x n`` matrices."""
    return _square_subcode(C, zero_diagonal=False)


def fact4_min_union(C: LinearCode, budget: int = 1 << 26) -> tuple[int, tuple[FVector, FVector] | None]:
    """Minimum ``|supp(x) | supp(y)|`` over linearly independent codewords.

    Returns the minimum and the first pair attaining it in message order,
    or ``(0, None)`` when ``k < 2``.

    Raises:
        BudgetExceeded: If ``q^(2k)`` exceeds ``budget``.
    """
    F = C.field
    q, k = F.q, C.k
    if k < 2:
        return 0, None
    if q ** (2 * k) > budget:
        raise BudgetExceeded(
            f"pair enumeration over {C.name} needs {q ** (2 * k)} pairs",
            needed=q ** (2 * k),
            budget=budget,
        )
    msgs = messages(F, k)
    words = _matmul_array(F, msgs, C.G.entries)
    supp = words != 0
    place = (q ** np.arange(k - 1, -1, -1)).astype(np.int64)
    best = C.n + 1
    pair: tuple[int, int] | None = None
    for x in range(1, msgs.shape[0]):
        union = np.count_nonzero(supp[x][None, :] | supp, axis=1)
        multiples = [int(F.scale(c, msgs[x]).astype(np.int64) @ place) for c in range(q)]
        union[multiples] = C.n + 1
        y = int(np.argmin(union))
        if int(union[y]) < best:
            best = int(union[y])
            pair = (x, y)
    assert pair is not None
    return best, (FVector(F, words[pair[0]]), FVector(F, words[pair[1]]))


# =============================================================================
# Moment codes
# =============================================================================


def moment_exponents(F: FieldSpec, d: int) -> list[tuple[int, int]]:
    """``(a, b)`` with ``a, b <= q - 1`` and ``a + b < d``."""
    return [(a, b) for a in range(F.q) for b in range(F.q) if a + b < d]


def moment_code(F: FieldSpec, d: int) -> LinearCode:
    """Functions ``f: F_q^2 -> F_q`` with ``sum_{x,y} x^a y^b f(x, y) = 0``
    for every ``(a, b)`` in :func:`moment_exponents`.

    Coordinates are the points of F_q^2 in lexicographic order.  The
    moment rows are independent, so the dimension is ``q^2`` minus their
    number.
    """
    if not 0 <= d <= 2 * (F.q - 1):
        raise UsageError(f"moment degree {d} outside [0, {2 * (F.q - 1)}]")
    exps = moment_exponents(F, d)
    if not exps:
        return LinearCode(FMatrix.identity(F, F.q**2), name=f"moment{d}")
    V = FMatrix(F, monomial_matrix(F, messages(F, 2), exps))
    return LinearCode(nullspace_matrix(V), H=V, name=f"moment{d}")
