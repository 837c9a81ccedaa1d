# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Reduction outputs and the parameters and bounds that travel with them."""

from __future__ import annotations

import dataclasses
import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from ..codes import AffineSubspace, LinearCode, tensor
from ..csp import MaxNandInstance
from ..errors import NotInjective, SizeOverflow, UsageError
from ..gf import FieldSpec
from ..linalg import FMatrix, FVector, _matmul_array, nullspace_matrix, rank
from ..prg import EvaluationSet
from .layout import Coords, ProjectionEntry, VariableLayout, expand_projection
from .system import ConstraintSystem

logger = logging.getLogger(__name__)

Kind = Literal["ncp2", "mindist2", "mindistq"]
Branch = Literal["assignment", "structure"]

MAX_BOOST_LENGTH = 1 << 16
MAX_BOOST_ENTRIES = 1 << 26


@dataclass(frozen=True)
class ReductionParams:
    q: int
    n: int
    m: int
    N: int
    r: int


@dataclass(frozen=True)
class Bounds:
    """Completeness weight and soundness floor of one construction.

    ``soundness_floor`` is ``None`` when ``delta`` could not be measured.
    ``active_branch`` names the smaller side of the floor's minimum:
    ``assignment`` for the term driven by unsatisfied constraints,
    ``structure`` for the term driven by the code geometry alone.
    """

    completeness_weight: int
    soundness_floor: Fraction | None = None
    active_branch: Branch | None = None
    delta: Fraction | None = None
    epsilon: Fraction | None = None


def _min_branch(assignment: Fraction, structure: Fraction) -> tuple[Fraction, Branch]:
    if assignment <= structure:
        return assignment, "assignment"
    return structure, "structure"


def ncp2_bounds(m: int, delta: Fraction | None) -> Bounds:
    if delta is None:
        return Bounds(m)
    return Bounds(m, (1 + 2 * delta) * m, "assignment", delta)


def mindist2_bounds(N: int, m: int, r: int, delta: Fraction | None, epsilon: Fraction) -> Bounds:
    """``min((1 + 2 delta) r m + N^2, (3/2 - 12 eps) N^2)``."""
    if delta is None:
        return Bounds(N * N + r * m, epsilon=epsilon)
    floor, branch = _min_branch(
        (1 + 2 * delta) * r * m + N * N,
        (Fraction(3, 2) - 12 * epsilon) * N * N,
    )
    return Bounds(N * N + r * m, floor, branch, delta, epsilon)


def mindistq_bounds(N: int, m: int, r: int, q: int, delta: Fraction | None) -> Bounds:
    """``min(N^2 + (1 + delta) r m, (1 + 1/q) N^2)``."""
    if delta is None:
        return Bounds(N * N + r * m)
    floor, branch = _min_branch(
        N * N + (1 + delta) * r * m,
        (1 + Fraction(1, q)) * N * N,
    )
    return Bounds(N * N + r * m, floor, branch, delta)


def choose_r(N: int, m: int, q: int, delta: Fraction | float) -> int:
    """Repetition count balancing the two sides of the soundness floor.

    ``N^2 / ((1 + delta) q m)`` for ``q >= 3`` and ``N^2 / (2 (1 + 2 delta) m)``
    for ``q = 2``, rounded half up, at least 1.
    """
    d = Fraction(delta)
    if not 0 < d <= 1:
        raise UsageError(f"delta must lie in (0, 1], got {delta}")
    if q == 2:
        exact = Fraction(N * N) / (2 * (1 + 2 * d) * m)
    else:
        exact = Fraction(N * N) / ((1 + d) * q * m)
    return max(1, math.floor(exact + Fraction(1, 2)))


def tensor_boost(C: LinearCode, t: int) -> LinearCode:
    """``t``-fold tensor square: ``C``, ``C (x) C``, ``(C (x) C) (x) (C (x) C)``, ...

    Raises:
        SizeOverflow: If a square would exceed ``2^16`` coordinates or
            ``2^26`` generator entries.
    """
    if t < 0:
        raise UsageError(f"boost count must be non-negative, got {t}")
    out = C
    for step in range(t):
        n, k = out.n**2, out.k**2
        if n > MAX_BOOST_LENGTH or n * k > MAX_BOOST_ENTRIES:
            raise SizeOverflow(
                f"boost {step + 1} of {C.name} would be a [{n}, {k}] code",
                needed=n * k,
                budget=MAX_BOOST_ENTRIES,
            )
        out = tensor(out, out)
    return out


@dataclass(frozen=True, eq=False)
class ReductionArtifact:
    """A constructed code together with everything needed to check it.

    ``basis`` spans the solution space of ``system`` in variable space and
    ``code`` is its image under the output projection.  For ``ncp2``,
    ``affine`` is the output coset and ``particular`` a full solution
    with the constant column at 1.  Artifacts read back from disk carry
    neither ``basis`` nor ``system``.
    """

    kind: Kind
    psi: MaxNandInstance
    params: ReductionParams
    code: LinearCode
    layout: VariableLayout
    projection: tuple[ProjectionEntry, ...]
    bounds: Bounds
    injective: bool
    basis: FMatrix | None = None
    system: ConstraintSystem | None = None
    affine: AffineSubspace | None = None
    particular: FVector | None = None
    encoder: LinearCode | None = None
    points: EvaluationSet | None = None
    provenance: dict[str, int] = dataclasses.field(default_factory=lambda: dict[str, int]())

    @property
    def field(self) -> FieldSpec:
        return self.code.field

    @property
    def output_length(self) -> int:
        return self.code.n

    @property
    def dimension(self) -> int:
        return self.code.k

    @property
    def rate(self) -> float:
        return self.code.rate

    def relative_distance(self, distance: float) -> float:
        return self.code.relative_distance(distance)

    @functools.cached_property
    def output_sources(self) -> Coords:
        return expand_projection(self.projection)

    def project(self, v: FVector) -> FVector:
        """Output word of a full variable vector."""
        if len(v) != self.layout.total:
            raise UsageError(f"variable vector of length {len(v)}, layout has {self.layout.total}")
        return FVector(self.field, v.entries[self.output_sources])

    def lift(self, message: FVector) -> FVector:
        """Full variable vector of the codeword with the given message."""
        if self.basis is None:
            raise UsageError("artifact carries no solution basis")
        if len(message) != self.basis.rows:
            raise UsageError(f"message of length {len(message)}, code dimension {self.basis.rows}")
        v = _matmul_array(self.field, message.entries[None, :], self.basis.entries)[0]
        if self.particular is not None:
            v = self.field.add(v, self.particular.entries)
        return FVector(self.field, v)

    def block(self, v: FVector, name: str) -> np.ndarray:
        """Values of block ``name`` in ``v``, in the block's shape."""
        b = self.layout[name]
        return v.entries[b.start : b.stop].reshape(b.shape)

    def __repr__(self) -> str:
        p = self.params
        return (
            f"ReductionArtifact({self.kind}: q={p.q} n={p.n} m={p.m} N={p.N} r={p.r}, "
            f"[{self.output_length}, {self.dimension}])"
        )


def project_solutions(
    basis: FMatrix, projection: list[ProjectionEntry], *, name: str
) -> LinearCode:
    """Image of the row space of ``basis`` under ``projection``.

    Raises:
        NotInjective: If two distinct solutions share an output word.
    """
    unique = np.unique(np.array([e.source for e in projection], dtype=np.intp))
    if rank(basis.columns(unique)) != basis.rows:
        raise NotInjective(
            f"{name}: output projection loses part of the {basis.rows}-dimensional solution space"
        )
    return LinearCode(basis.columns(expand_projection(projection)), name=name)


def solution_basis(system: ConstraintSystem) -> FMatrix:
    H = system.matrix()
    B = nullspace_matrix(H)
    logger.info(
        "%dx%d system over %s has rank %d, %d-dimensional solution space",
        H.rows, H.cols, system.field, H.cols - B.rows, B.rows,
    )
    return B
