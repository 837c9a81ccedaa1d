# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Structural checks on built artifacts and the case-split distance certificate.

The identity checks run on the rows of the solution basis: they are
linear, so holding on a basis means holding on every codeword.

:func:`case_split_floor` lower-bounds the minimum distance without
enumerating the whole code.  Nonzero codewords fall into cases by the
value of the constant coordinate (``Y_0`` or ``x0``) and, when it is
zero, by the lowest-degree nonzero product block.  Each case gets a
floor from quantities small enough to measure exactly: the image of the
solution space on the constant and ``S`` coordinates, distances of the
polynomial codes, minimum supports of moment codes, and the distance of
a symmetric zero-diagonal subcode.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..codes import (
    LinearCode,
    moment_code,
    polynomial_code,
    symmetric_zero_diag_subcode,
)
from ..distance import DEFAULT_BUDGET, min_distance_exact
from ..errors import BudgetExceeded, UsageError
from ..linalg import Array, FMatrix, _matmul_array, inverse, rref, span_enumerate
from ..prg import exhaustive_set, monomial_matrix
from ..progress import NullProgressReporter, ProgressReporter
from .artifact import ReductionArtifact
from .layout import Coords, s, ye, yef, z
from .system import (
    PATTERN_BOTH,
    PATTERN_FIRST,
    PATTERN_SECOND,
    PATTERN_SUM,
    nand_gadget_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagnosticReport:
    """Outcome of an identity check over the solution basis."""

    name: str
    checked: int
    mismatches: int

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def _solutions(artifact: ReductionArtifact) -> Array:
    if artifact.basis is None:
        raise UsageError("artifact carries no solution basis")
    rows = artifact.basis.entries
    if artifact.particular is not None:
        rows = np.vstack([rows, artifact.particular.entries[None, :]])
    return rows


def _constant_coord(artifact: ReductionArtifact) -> int:
    layout = artifact.layout
    if artifact.kind == "ncp2":
        return layout["one"].start
    if artifact.kind == "mindist2":
        return layout["x0"].start
    return layout[yef(0, 0)].coord(0, 0)


def _assignment_values(artifact: ReductionArtifact, V: Array) -> Array:
    """``alpha`` of every row of ``V``, one column per variable."""
    F = artifact.field
    if artifact.kind != "mindistq":
        return V[:, artifact.layout["x"].coords()]
    assert artifact.encoder is not None
    decoder = getattr(artifact.encoder, "decoder", None)
    if decoder is None:
        raise UsageError("mindistq artifact has no decoder")
    power = V[:, artifact.layout[ye(1)].coords()]
    return _matmul_array(F, power, decoder.entries.T)


def _compare(
    artifact: ReductionArtifact, blocks: Array, direct: Array, gadget: FMatrix
) -> int:
    """Rows where ``blocks`` differs from ``inverse(gadget) @ direct``."""
    F = artifact.field
    flat_direct = direct.reshape(-1, direct.shape[-1])
    predicted = _matmul_array(F, flat_direct, inverse(gadget).entries.T)
    return int(np.count_nonzero(np.any(predicted != blocks.reshape(predicted.shape), axis=1)))


def _square_gadget(artifact: ReductionArtifact) -> FMatrix:
    F = artifact.field
    if artifact.kind == "mindist2":
        rows = [PATTERN_SUM, PATTERN_FIRST, PATTERN_SECOND, PATTERN_BOTH]
        return FMatrix(F, np.array(rows, dtype=np.uint8))
    q = F.q
    exps = [(e, f) for e in range(q) for f in range(q)]
    return FMatrix(F, monomial_matrix(F, exhaustive_set(F, 2).points, exps))


def _square_direct(artifact: ReductionArtifact, V: Array) -> Array:
    """Values the ``Z`` gadget rows should produce, shape ``(rows, N, N, g)``."""
    layout = artifact.layout
    N = artifact.params.N
    if artifact.kind == "mindist2":
        x0 = V[:, layout["x0"].start]
        y = V[:, layout["y"].coords()]
        Y = V[:, layout["Y"].coords()].reshape(-1, N, N)
        return np.stack(
            [
                np.broadcast_to(x0[:, None, None], Y.shape),
                np.broadcast_to(y[:, :, None], Y.shape),
                np.broadcast_to(y[:, None, :], Y.shape),
                Y,
            ],
            axis=-1,
        )
    q = artifact.field.q
    parts = [
        V[:, layout[yef(e, f)].coords()].reshape(-1, N, N)
        for e in range(q)
        for f in range(q)
    ]
    return np.stack(parts, axis=-1)


def _z_values(artifact: ReductionArtifact, V: Array) -> Array:
    N = artifact.params.N
    idx = np.stack(
        [artifact.layout[z(i, j)].coords() for i in range(N) for j in range(N)]
    )
    return V[:, idx].reshape(V.shape[0], N, N, -1)


def check_invertibility(artifact: ReductionArtifact) -> DiagnosticReport:
    """Rebuild every ``S`` and ``Z`` block from the values its gadget ties it to.

    ``S[c]`` must equal the inverted NAND gadget applied to
    ``(one, alpha_i, alpha_j, alpha_k)``; ``Z[i][j]`` the inverted square
    gadget applied to its targets.  Counts (row, block) mismatches.
    """
    V = _solutions(artifact)
    F = artifact.field
    const = V[:, _constant_coord(artifact)]
    alpha = _assignment_values(artifact, V)
    nand = nand_gadget_matrix(F)

    mismatches = 0
    checked = 0
    for c, (k, i, j) in enumerate(artifact.psi.constraints):
        S = V[:, artifact.layout[s(c)].coords()]
        direct = np.stack([const, alpha[:, i], alpha[:, j], alpha[:, k]], axis=1)
        mismatches += _compare(artifact, S, direct, nand)
        checked += V.shape[0]

    if artifact.kind != "ncp2":
        Z = _z_values(artifact, V)
        direct = _square_direct(artifact, V)
        mismatches += _compare(artifact, Z, direct, _square_gadget(artifact))
        checked += Z.shape[0] * Z.shape[1] * Z.shape[2]

    logger.info("invertibility of %s: %d mismatches in %d blocks", artifact.kind, mismatches, checked)
    return DiagnosticReport("invertibility", checked, mismatches)


def check_f2_inverse_formulas(artifact: ReductionArtifact) -> DiagnosticReport:
    """The closed forms of a binary ``S`` block in terms of the constant and ``x``:

    ``S(0,0) = x_i + x_j + x_k``, ``S(0,1) = x_0 + x_j + x_k``,
    ``S(1,0) = x_0 + x_i + x_k``, ``S(1,1) = x_0 + x_k``.
    """
    if artifact.kind == "mindistq":
        raise UsageError("closed-form inverses are for the binary constructions")
    V = _solutions(artifact)
    x0 = V[:, _constant_coord(artifact)]
    x = V[:, artifact.layout["x"].coords()]
    mismatches = 0
    for c, (k, i, j) in enumerate(artifact.psi.constraints):
        S = V[:, artifact.layout[s(c)].coords()]
        expected = np.stack(
            [
                x[:, i] ^ x[:, j] ^ x[:, k],
                x0 ^ x[:, j] ^ x[:, k],
                x0 ^ x[:, i] ^ x[:, k],
                x0 ^ x[:, k],
            ],
            axis=1,
        )
        mismatches += int(np.count_nonzero(np.any(S != expected, axis=1)))
    return DiagnosticReport("f2-inverse-formulas", V.shape[0] * artifact.psi.m, mismatches)


def case1_structure(artifact: ReductionArtifact) -> DiagnosticReport:
    """Every ``S`` and ``Z`` block sums to the constant coordinate.

    So once the constant is nonzero, no block can vanish.  For the F_q
    construction all of ``Yef[0][0]`` must also equal ``Y_0``.
    """
    V = _solutions(artifact)
    F = artifact.field
    const = V[:, _constant_coord(artifact)]
    blocks: list[Coords] = [artifact.layout[s(c)].coords() for c in range(artifact.psi.m)]
    N = artifact.params.N
    if artifact.kind != "ncp2":
        blocks.extend(artifact.layout[z(i, j)].coords() for i in range(N) for j in range(N))

    mismatches = 0
    for idx in blocks:
        sums = F.sum(V[:, idx], axis=1)
        mismatches += int(np.count_nonzero(sums != const))
    checked = len(blocks) * V.shape[0]
    if artifact.kind == "mindistq":
        Y00 = V[:, artifact.layout[yef(0, 0)].coords()]
        mismatches += int(np.count_nonzero(np.any(Y00 != const[:, None], axis=1)))
        checked += V.shape[0]
    return DiagnosticReport("case1-structure", checked, mismatches)


# =============================================================================
# Case-split certificate
# =============================================================================


@dataclass(frozen=True)
class CaseFloor:
    """A lower bound on the weight of every nonzero codeword in one case."""

    case: int
    description: str
    floor: int | float
    method: str


@dataclass(frozen=True)
class CaseSplitCertificate:
    cases: tuple[CaseFloor, ...]
    claimed: Fraction | None

    @property
    def floor(self) -> int | float:
        return min(c.floor for c in self.cases)

    @property
    def passed(self) -> bool:
        return self.claimed is None or self.floor >= self.claimed


def _constant_case(artifact: ReductionArtifact, budget: int) -> CaseFloor:
    """Constant coordinate nonzero: every ``Z`` block counts once, ``S`` blocks exactly."""
    if artifact.basis is None:
        raise UsageError("artifact carries no solution basis")
    m = artifact.psi.m
    cols = [_constant_coord(artifact)]
    for c in range(m):
        cols.extend(int(v) for v in artifact.layout[s(c)].coords())
    image = rref(artifact.basis.columns(cols))
    span = span_enumerate(FMatrix(artifact.field, image.matrix.entries[: image.rank]), budget)
    live = span[span[:, 0] != 0]
    N, r = artifact.params.N, artifact.params.r
    if live.shape[0] == 0:
        return CaseFloor(1, "constant nonzero: no such codeword", math.inf, "image-enumeration")
    min_s = int(np.count_nonzero(live[:, 1:], axis=1).min())
    logger.debug("constant-nonzero image has %d words, lightest S weight %d", span.shape[0], min_s)
    return CaseFloor(
        1, f"constant nonzero: N^2 + r * {min_s}", N * N + r * min_s, "image-enumeration"
    )


def _distance(C: LinearCode, budget: int, memo: dict[str, int | float]) -> int | float:
    if C.name not in memo:
        memo[C.name] = min_distance_exact(C, budget).distance
    return memo[C.name]


def _zero_diagonal_floor(C: LinearCode, d: int | float, budget: int) -> tuple[int | float, str]:
    sub = symmetric_zero_diag_subcode(C)
    if sub.k == 0:
        return math.inf, "empty-subcode"
    try:
        return min_distance_exact(sub, budget).distance, "exact"
    except BudgetExceeded:
        q = C.field.q
        logger.warning("%s too large to enumerate; using the d^2 (1 + 1/q) bound", sub.name)
        return math.ceil(Fraction(int(d) ** 2) * (1 + Fraction(1, q))), "square-bound"


def _binary_cases(artifact: ReductionArtifact, budget: int) -> list[CaseFloor]:
    assert artifact.encoder is not None
    C = artifact.encoder
    N = artifact.params.N
    d = min_distance_exact(C, budget).distance
    # y != 0 has >= d nonzero entries; each pair (i, j) off the zero-zero
    # corner forces a Z block of weight >= 2.
    pairs = N * N - (N - int(d)) ** 2
    sym, method = _zero_diagonal_floor(C, d, budget)
    return [
        CaseFloor(2, "constant zero, y nonzero", 2 * pairs, "code-distance"),
        CaseFloor(3, "constant and y zero, Y nonzero", 4 * sym, f"zero-diagonal-{method}"),
    ]


def _fq_cases(artifact: ReductionArtifact, budget: int) -> list[CaseFloor]:
    F = artifact.field
    q = F.q
    assert artifact.points is not None
    R = artifact.points
    P = [polynomial_code(F, artifact.params.n, e, R) for e in range(q)]
    memo: dict[str, int | float] = {}
    dist = [_distance(P[e], budget, memo) for e in range(q)]
    support = {d: _distance(moment_code(F, d), budget, memo) for d in range(1, 2 * (q - 1) + 1)}

    floors: list[CaseFloor] = []
    for d in range(1, 2 * (q - 1) + 1):
        if d < q - 1:
            case = 2
        elif d == q - 1:
            case = 3
        elif d < 2 * (q - 1):
            case = 4
        else:
            case = 5
        if case == 5:
            top, method = _zero_diagonal_floor(P[q - 1], dist[q - 1], budget)
            floors.append(
                CaseFloor(5, f"lowest product degree {d}", top * support[d], f"zero-diagonal-{method}")
            )
            continue
        pairs = [(e, d - e) for e in range(q) if 0 <= d - e <= q - 1]
        if case == 3:
            # A nonzero Yef[0][q-1] forces Yef[q-2][1] nonzero through the diagonals.
            pairs = [(e, f) for e, f in pairs if e * f >= q - 2]
        floor = min(dist[e] * dist[f] for e, f in pairs) * support[d]
        floors.append(CaseFloor(case, f"lowest product degree {d}", floor, "tensor-moment"))
    return floors


def case_split_floor(
    artifact: ReductionArtifact,
    *,
    budget: int = DEFAULT_BUDGET,
    reporter: ProgressReporter | None = None,
) -> CaseSplitCertificate:
    """Certified lower bound on the minimum distance, case by case.

    Raises:
        UsageError: For the nearest codeword construction.
        BudgetExceeded: If even the per-case enumerations are too large.
    """
    if artifact.kind == "ncp2":
        raise UsageError("the case split applies to the minimum distance constructions")
    reporter = reporter or NullProgressReporter()
    cases = [_constant_case(artifact, budget)]
    if artifact.kind == "mindist2":
        cases.extend(_binary_cases(artifact, budget))
    else:
        cases.extend(_fq_cases(artifact, budget))
    cert = CaseSplitCertificate(tuple(cases), artifact.bounds.soundness_floor)
    for c in cases:
        reporter.dim(f"case {c.case} ({c.description}): >= {c.floor}")
    logger.info("case split for %s: floor %s, claimed %s", artifact.kind, cert.floor, cert.claimed)
    return cert
