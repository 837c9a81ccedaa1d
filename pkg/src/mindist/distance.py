# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Exact minimum-weight search over linear codes and affine subspaces.

The message space F_q^k is split into a low block of ``b`` rows, whose
``q^b`` codewords are tabulated once, and a high block enumerated in
modular Gray-code order.  Consecutive Gray words differ in one digit by
``+1``, so each outer step adds a single precomputed row multiple to the
running vector and then scores the whole low table against it in one
vectorised pass.

The outer range is cut into contiguous chunks that worker threads
traverse independently; each worker computes its own starting Gray
word.  The reported witness is the lexicographically smallest vector of
minimum weight, so the result does not depend on the partition or on
the thread count.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

import numpy as np

from .errors import BudgetExceeded
from .gf import FieldSpec
from .linalg import Array, FMatrix, FVector, _matmul_array, messages
from .progress import NullProgressBar, NullProgressReporter, ProgressBar, ProgressReporter

if TYPE_CHECKING:
    from .codes import AffineSubspace, LinearCode

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1 << 30
INFINITY = math.inf

# Rows of the tabulated low block; q^b stays at or below this.
_LOW_BLOCK_LIMIT = 1 << 12
_CHUNKS_PER_THREAD = 4
_PROGRESS_STRIDE = 256

Method = Literal["exact-enumeration"]


@dataclass(frozen=True)
class DistanceReport:
    """Result of an exact minimum-weight search.

    ``distance`` is :data:`INFINITY` for the zero code, in which case
    ``witness`` is ``None``.
    """

    distance: int | float
    witness: FVector | None
    method: Method
    enumerated: int

    @property
    def is_infinite(self) -> bool:
        return self.distance == INFINITY


@dataclass(frozen=True)
class _Best:
    weight: int
    vector: Array

    def beats(self, other: _Best | None) -> bool:
        if other is None:
            return True
        if self.weight != other.weight:
            return self.weight < other.weight
        return self.vector.tobytes() < other.vector.tobytes()


def _q_valuation(i: int, q: int) -> int:
    j = 0
    while i % q == 0:
        i //= q
        j += 1
    return j


def _gray_digits(i: int, q: int, h: int) -> list[int]:
    d = [(i // q**j) % q for j in range(h + 1)]
    return [(d[j] - d[j + 1]) % q for j in range(h)]


class _Search:
    def __init__(self, F: FieldSpec, G: Array, offset: Array, exclude_zero: bool) -> None:
        self.F = F
        self.exclude_zero = exclude_zero
        self.offset = offset
        k, self.n = G.shape
        b = 0
        while b < k and F.q ** (b + 1) <= _LOW_BLOCK_LIMIT:
            b += 1
        self.table = _matmul_array(F, messages(F, b), G[:b])
        self.high = G[b:]
        self.h = k - b
        self.outer = F.q**self.h
        # delta[j, g] = (e(g + 1) - e(g)) * high[j]
        steps = F.sub(np.roll(np.arange(F.q), -1), np.arange(F.q))
        self.delta = F.mul_table[steps[None, :, None], self.high[:, None, :]]

    def start_vector(self, i: int) -> tuple[Array, list[int]]:
        F = self.F
        g = _gray_digits(i, F.q, self.h)
        c = self.offset.copy()
        for j, gj in enumerate(g):
            if gj:
                c = F.add_table[c, F.mul_table[gj][self.high[j]]]
        return c, g

    def run(
        self, start: int, end: int, bar: ProgressBar | NullProgressBar
    ) -> _Best | None:
        F = self.F
        add = F.add_table
        c, g = self.start_vector(start)
        best: _Best | None = None
        for i in range(start, end):
            if i > start:
                j = _q_valuation(i, F.q)
                c = add[c, self.delta[j, g[j]]]
                g[j] = (g[j] + 1) % F.q
            W = add[self.table, c[None, :]]
            w = np.count_nonzero(W, axis=1)
            if self.exclude_zero and i == 0:
                w[0] = self.n + 1
            m = int(w.min())
            if m > self.n:
                continue
            if best is None or m <= best.weight:
                ties = W[w == m]
                first = np.lexsort(ties.T[::-1])[0] if ties.shape[0] > 1 else 0
                cand = _Best(m, ties[first].copy())
                if cand.beats(best):
                    best = cand
            if (i - start) % _PROGRESS_STRIDE == _PROGRESS_STRIDE - 1:
                bar.advance(_PROGRESS_STRIDE)
        return best


def min_weight_search(
    G: FMatrix,
    offset: FVector | None = None,
    *,
    exclude_zero: bool = True,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    reporter: ProgressReporter | None = None,
) -> DistanceReport:
    """Minimum weight of ``offset + u @ G`` over all messages ``u``.

    With ``exclude_zero`` the all-zero message is skipped, which gives the
    minimum distance when ``offset`` is zero and ``G`` has full row rank.

    Raises:
        BudgetExceeded: If ``q^k`` exceeds ``budget``.
    """
    F = G.field
    reporter = reporter or NullProgressReporter()
    k, n = G.shape
    total = F.q**k
    if total > budget:
        raise BudgetExceeded(
            f"enumerating {F.q}^{k} = {total} codewords exceeds the budget of {budget}",
            needed=total,
            budget=budget,
        )
    off = offset.entries if offset is not None else np.zeros(n, dtype=np.uint8)
    if exclude_zero and k == 0:
        return DistanceReport(INFINITY, None, "exact-enumeration", 0)

    search = _Search(F, G.entries, off, exclude_zero)
    chunks = max(1, min(search.outer, threads * _CHUNKS_PER_THREAD))
    bounds = [search.outer * c // chunks for c in range(chunks + 1)]
    logger.debug(
        "Searching %d codewords over %s (low block %d rows, %d chunks, %d threads)",
        total, F, search.table.shape[0], chunks, threads,
    )

    with reporter.track(f"Enumerating {total} words", total=search.outer) as bar:
        if threads <= 1:
            results = [search.run(bounds[c], bounds[c + 1], bar) for c in range(chunks)]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [
                    pool.submit(search.run, bounds[c], bounds[c + 1], bar)
                    for c in range(chunks)
                ]
                results = [f.result() for f in futures]

    best: _Best | None = None
    for r in results:
        if r is not None and r.beats(best):
            best = r
    enumerated = total - 1 if exclude_zero else total
    if best is None:
        return DistanceReport(INFINITY, None, "exact-enumeration", enumerated)
    return DistanceReport(best.weight, FVector(F, best.vector), "exact-enumeration", enumerated)


def min_distance_exact(
    C: LinearCode,
    budget: int = DEFAULT_BUDGET,
    *,
    threads: int = 1,
    reporter: ProgressReporter | None = None,
) -> DistanceReport:
    """Exact minimum distance of ``C`` with a lexicographically smallest witness.

    Raises:
        BudgetExceeded: If ``q^k`` exceeds ``budget``.
    """
    report = min_weight_search(
        C.G, None, exclude_zero=True, budget=budget, threads=threads, reporter=reporter
    )
    logger.info("d(%s) = %s after %d codewords", C.name, report.distance, report.enumerated)
    return report


def ncp_min_weight(
    A: AffineSubspace,
    budget: int = DEFAULT_BUDGET,
    *,
    threads: int = 1,
    reporter: ProgressReporter | None = None,
) -> DistanceReport:
    """Minimum weight over the points ``offset + c``, ``c`` in ``A.code``.

    Raises:
        BudgetExceeded: If ``q^k`` exceeds ``budget``.
    """
    return min_weight_search(
        A.code.G,
        A.offset,
        exclude_zero=False,
        budget=budget,
        threads=threads,
        reporter=reporter,
    )
