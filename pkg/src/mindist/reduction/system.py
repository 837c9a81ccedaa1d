# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Homogeneous linear constraint systems over a :class:`VariableLayout`.

Equations are collected in insertion order, each tagged with the name of
the constraint group that produced it, and assembled into one dense
matrix on demand.  Right-hand constants never appear: a reduction that
needs them dedicates a variable to the constant and pins it separately.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Sequence

import numpy as np

from ..gf import FieldSpec
from ..linalg import Array, FMatrix, FVector, _matmul_array
from .layout import Block, Coords, VariableLayout

logger = logging.getLogger(__name__)

Term = tuple[int, int]
"""``(column, coefficient)``."""

LinearForm = Sequence[Term]

# Coefficient patterns over a 2x2 indicator block, entries ordered
# (0,0), (0,1), (1,0), (1,1).
PATTERN_SUM = (1, 1, 1, 1)
PATTERN_FIRST = (0, 0, 1, 1)
PATTERN_SECOND = (0, 1, 0, 1)
PATTERN_NAND = (1, 1, 1, 0)
PATTERN_BOTH = (0, 0, 0, 1)


class ConstraintSystem:
    """Rows of ``H`` with ``H @ v = 0`` for every admissible variable vector ``v``."""

    def __init__(self, field: FieldSpec, layout: VariableLayout) -> None:
        self.field = field
        self.layout = layout
        self._chunks: list[tuple[str, Coords, Array]] = []
        self._rows = 0
        self._matrix: FMatrix | None = None

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self.layout.total

    def __repr__(self) -> str:
        return f"ConstraintSystem({self.rows}x{self.cols} over {self.field})"

    def _append(self, tag: str, cols: Coords, M: Array) -> None:
        keep = np.any(M != 0, axis=1)
        if not keep.all():
            M = M[keep]
        if M.shape[0] == 0:
            return
        self._chunks.append((tag, cols, M))
        self._rows += M.shape[0]
        self._matrix = None

    def equation(self, tag: str, terms: Iterable[Term]) -> None:
        """Add ``sum(coeff * v[col]) = 0``; repeated columns are combined."""
        F = self.field
        acc: dict[int, int] = {}
        for col, coeff in terms:
            acc[col] = F.add(acc.get(col, 0), coeff)
        order = sorted(acc)
        cols = np.array(order, dtype=np.intp)
        M = np.array([[acc[c] for c in order]], dtype=np.uint8).reshape(1, cols.size)
        self._append(tag, cols, M)

    def equal(self, tag: str, a: int, b: int) -> None:
        """Add ``v[a] = v[b]``."""
        self.equation(tag, [(a, 1), (b, self.field.neg(1))])

    def block_equations(self, tag: str, cols: Sequence[int] | Coords, M: Array | FMatrix) -> None:
        """Add one equation per row of ``M``, whose columns map to ``cols``."""
        entries = M.entries if isinstance(M, FMatrix) else np.asarray(M, dtype=np.uint8)
        idx = np.asarray(cols, dtype=np.intp)
        if entries.shape[1] != idx.size:
            raise ValueError(f"{entries.shape[1]} coefficient columns for {idx.size} variables")
        if np.unique(idx).size != idx.size:
            raise ValueError(f"{tag}: repeated variable in a block equation")
        self._append(tag, idx, entries)

    def member_of(self, tag: str, cols: Sequence[int] | Coords, parity_check: FMatrix) -> None:
        """Constrain the variables at ``cols`` to the code with the given parity check."""
        self.block_equations(tag, cols, parity_check)

    def matrix(self) -> FMatrix:
        """The assembled ``rows x cols`` matrix."""
        if self._matrix is None:
            H = np.zeros((self._rows, self.cols), dtype=np.uint8)
            r = 0
            for _tag, cols, M in self._chunks:
                H[r : r + M.shape[0], cols] = M
                r += M.shape[0]
            self._matrix = FMatrix(self.field, H)
            logger.debug("assembled %s", self)
        return self._matrix

    def tags(self) -> list[str]:
        """Producing constraint group of every row, in row order."""
        out: list[str] = []
        for tag, _cols, M in self._chunks:
            out.extend([tag] * M.shape[0])
        return out

    def provenance(self) -> dict[str, int]:
        """Row count per constraint group, in first-seen order."""
        return dict(Counter(self.tags()))

    def residual(self, v: FVector) -> FVector:
        """``H @ v``."""
        H = self.matrix()
        return FVector(self.field, _matmul_array(self.field, H.entries, v.entries[:, None])[:, 0])

    def violated(self, v: FVector) -> list[str]:
        """Tags of the rows ``v`` violates, deduplicated in row order."""
        res = self.residual(v).entries
        tags = self.tags()
        seen: dict[str, None] = {}
        for row in np.flatnonzero(res):
            seen.setdefault(tags[int(row)], None)
        return list(seen)


# =============================================================================
# Gadgets
# =============================================================================


def negated(F: FieldSpec, form: LinearForm) -> list[Term]:
    return [(col, F.neg(coeff)) for col, coeff in form]


def pattern_gadget(
    system: ConstraintSystem,
    tag: str,
    block: Block,
    equations: Iterable[tuple[Sequence[int], LinearForm]],
) -> None:
    """For each ``(pattern, form)`` add ``sum_t pattern[t] * block[t] = form``."""
    F = system.field
    for pattern, form in equations:
        terms = [(block.start + t, coeff) for t, coeff in enumerate(pattern) if coeff]
        system.equation(tag, terms + negated(F, form))


def nand_gadget(
    system: ConstraintSystem,
    tag: str,
    block: Block,
    one: LinearForm,
    xi: LinearForm,
    xj: LinearForm,
    xk: LinearForm,
) -> None:
    """The four equations tying an ``S`` block to one constraint ``x_k = NAND(x_i, x_j)``.

    ``one`` stands for the constant 1: a pinned column, ``x_0`` or ``Y_0``.
    """
    pattern_gadget(
        system,
        tag,
        block,
        (
            (PATTERN_SUM, one),
            (PATTERN_FIRST, xi),
            (PATTERN_SECOND, xj),
            (PATTERN_NAND, xk),
        ),
    )


def nand_gadget_matrix(F: FieldSpec) -> FMatrix:
    """Rows map an ``S`` block to ``(one, x_i, x_j, x_k)``."""
    return FMatrix(F, np.array([PATTERN_SUM, PATTERN_FIRST, PATTERN_SECOND, PATTERN_NAND], dtype=np.uint8))


def single(col: int) -> list[Term]:
    return [(col, 1)]
