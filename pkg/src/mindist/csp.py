# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Max NAND instances: constraints ``x_k = NAND(x_i, x_j) = 1 + x_i x_j``.

Variables are 0-indexed here and 1-indexed in instance files.  Every
variable must occur in at least one constraint.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from .errors import NotPlantable, TooLarge, UsageError

logger = logging.getLogger(__name__)

MAX_EXACT_VARIABLES = 24
_CHUNK = 1 << 20
_REWIRE_ATTEMPTS = 1000

Constraint = tuple[int, int, int]


@dataclass(frozen=True)
class MaxNandInstance:
    """A Max NAND system over ``n`` boolean variables.

    Each constraint ``(k, i, j)`` reads ``x_k = NAND(x_i, x_j)``.
    """

    n: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(tuple(c) for c in self.constraints))
        if self.n < 1:
            raise UsageError(f"need at least one variable, got n={self.n}")
        if not self.constraints:
            raise UsageError("need at least one constraint")
        covered: set[int] = set()
        for idx, c in enumerate(self.constraints):
            if len(c) != 3:
                raise UsageError(f"constraint {idx + 1} is not a triple: {c}")
            for v in c:
                if not 0 <= v < self.n:
                    raise UsageError(f"constraint {idx + 1} uses variable {v + 1} outside [1, {self.n}]")
            covered.update(c)
        missing = sorted(set(range(self.n)) - covered)
        if missing:
            names = ", ".join(f"x{v + 1}" for v in missing)
            raise UsageError(f"variables {names} appear in no constraint")

    @property
    def m(self) -> int:
        return len(self.constraints)

    def __str__(self) -> str:
        return f"MaxNand(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Assignment:
    """Boolean assignment ``beta``; ``bits[v]`` is the value of ``x_{v+1}``."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise UsageError(f"assignment entries must be 0 or 1: {self.bits}")

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, v: int) -> int:
        return self.bits[v]

    @classmethod
    def from_index(cls, index: int, n: int) -> Assignment:
        """Assignment whose bits, ``x_1`` first, spell ``index`` in binary."""
        return cls(tuple((index >> (n - 1 - v)) & 1 for v in range(n)))


def _check_length(psi: MaxNandInstance, beta: Assignment) -> None:
    if len(beta) != psi.n:
        raise UsageError(f"assignment has {len(beta)} bits, instance has {psi.n} variables")


def is_satisfied(beta: Assignment, c: Constraint) -> bool:
    k, i, j = c
    return beta[k] == 1 ^ (beta[i] & beta[j])


def satisfied_count(psi: MaxNandInstance, beta: Assignment) -> int:
    """Number of constraints ``beta`` satisfies."""
    _check_length(psi, beta)
    return sum(is_satisfied(beta, c) for c in psi.constraints)


def _count_block(psi: MaxNandInstance, start: int, stop: int) -> npt.NDArray[np.int32]:
    idx = np.arange(start, stop, dtype=np.int64)
    bits = [((idx >> (psi.n - 1 - v)) & 1).astype(np.uint8) for v in range(psi.n)]
    counts = np.zeros(stop - start, dtype=np.int32)
    for k, i, j in psi.constraints:
        counts += bits[k] == (1 ^ (bits[i] & bits[j]))
    return counts


def opt_exact(psi: MaxNandInstance, *, threads: int = 1) -> tuple[Fraction, Assignment]:
    """Exact ``Opt(psi)`` and the lexicographically smallest optimal assignment.

    Raises:
        TooLarge: If ``n > 24``.
    """
    if psi.n > MAX_EXACT_VARIABLES:
        raise TooLarge(
            f"exact optimum needs 2^{psi.n} assignments; limit is 2^{MAX_EXACT_VARIABLES}",
            needed=2**psi.n,
            budget=2**MAX_EXACT_VARIABLES,
        )
    total = 1 << psi.n
    starts = list(range(0, total, _CHUNK))

    def best_in(start: int) -> tuple[int, int]:
        counts = _count_block(psi, start, min(start + _CHUNK, total))
        i = int(np.argmax(counts))
        return int(counts[i]), start + i

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(best_in, starts))
    else:
        results = [best_in(s) for s in starts]

    best, where = results[0]
    for value, index in results[1:]:
        if value > best:
            best, where = value, index
    logger.debug("Opt(%s) = %d/%d", psi, best, psi.m)
    return Fraction(best, psi.m), Assignment.from_index(where, psi.n)


# =============================================================================
# Generators
# =============================================================================


def _draw_planted_assignment(rng: np.random.Generator, n: int) -> list[int]:
    beta = [int(b) for b in rng.integers(0, 2, size=n)]
    if len(set(beta)) == 1:
        # Both values are needed so every NAND output is available.
        v = int(rng.integers(0, n))
        beta[v] ^= 1
    return beta


def _inputs_for_output(rng: np.random.Generator, beta: Sequence[int], out: int) -> tuple[int, int]:
    ones = [v for v, b in enumerate(beta) if b == 1]
    zeros = [v for v, b in enumerate(beta) if b == 0]
    if out == 0:
        return int(rng.choice(ones)), int(rng.choice(ones))
    i = int(rng.choice(zeros))
    j = int(rng.integers(0, len(beta)))
    return (i, j) if rng.integers(0, 2) else (j, i)


def _plant(rng: np.random.Generator, n: int, m: int) -> tuple[list[Constraint], list[int]]:
    if n < 2 or m < n:
        raise NotPlantable(f"planting needs n >= 2 and m >= n, got n={n}, m={m}")
    beta = _draw_planted_assignment(rng, n)
    constraints: list[Constraint] = []
    # Each variable is the output of one constraint, which covers all of them.
    for v in range(n):
        i, j = _inputs_for_output(rng, beta, beta[v])
        constraints.append((v, i, j))
    for _ in range(m - n):
        i, j = int(rng.integers(0, n)), int(rng.integers(0, n))
        target = 1 ^ (beta[i] & beta[j])
        ks = [v for v in range(n) if beta[v] == target]
        constraints.append((int(rng.choice(ks)), i, j))
    order = rng.permutation(m)
    return [constraints[int(c)] for c in order], beta


def gen_planted(n: int, m: int, seed: int) -> tuple[MaxNandInstance, Assignment]:
    """A satisfiable instance with ``m`` constraints and its planted assignment.

    Raises:
        NotPlantable: Unless ``n >= 2`` and ``m >= n``.
    """
    rng = np.random.default_rng(seed)
    constraints, beta = _plant(rng, n, m)
    return MaxNandInstance(n, tuple(constraints)), Assignment(tuple(beta))


def _covers(n: int, constraints: Iterable[Constraint]) -> bool:
    seen: set[int] = set()
    for c in constraints:
        seen.update(c)
    return len(seen) == n


def gen_noisy(n: int, m: int, flip: float, seed: int) -> MaxNandInstance:
    """A planted instance with ``ceil(flip * m)`` constraints rewired to
    violate the planted assignment, keeping every variable covered.

    The optimum is not assumed; measure it with :func:`opt_exact`.

    Raises:
        NotPlantable: If parameters are out of range or no covering rewiring
            was found.
    """
    if not 0.0 <= flip <= 1.0:
        raise NotPlantable(f"flip fraction must be in [0, 1], got {flip}")
    rng = np.random.default_rng(seed)
    constraints, beta = _plant(rng, n, m)
    count = math.ceil(flip * m)
    chosen = sorted(int(c) for c in rng.choice(m, size=count, replace=False))
    for _ in range(_REWIRE_ATTEMPTS):
        trial = list(constraints)
        for c in chosen:
            i, j = int(rng.integers(0, n)), int(rng.integers(0, n))
            bad = beta[i] & beta[j]
            ks = [v for v in range(n) if beta[v] == bad]
            trial[c] = (int(rng.choice(ks)), i, j)
        if _covers(n, trial):
            return MaxNandInstance(n, tuple(trial))
    raise NotPlantable(f"no covering rewiring of {count} constraints found")


def contradiction() -> MaxNandInstance:
    """``{x_1 = NAND(x_1, x_1)}``, which no assignment satisfies."""
    return MaxNandInstance(1, ((0, 0, 0),))


def pad_variables(psi: MaxNandInstance, n: int) -> MaxNandInstance:
    """Extend ``psi`` to ``n`` variables with ``x_v = NAND(x_1, x_1)`` for each
    new ``x_v``.

    Setting ``x_v = 1 - x_1`` satisfies every added constraint, so
    ``Opt`` of the result is ``(Opt(psi) * m + added) / (m + added)``.
    """
    if n < psi.n:
        raise UsageError(f"cannot pad {psi} down to {n} variables")
    extra = tuple((v, 0, 0) for v in range(psi.n, n))
    return MaxNandInstance(n, psi.constraints + extra)
