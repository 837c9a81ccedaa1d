# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Entry points for the Min Dist constructions.

Each builder fills a context, runs its pipeline to assemble the
constraint system, takes the solution space and projects it onto the
output coordinates: every ``Z`` block once, every ``S`` block ``r``
times.  The projection is checked to be injective before an artifact is
returned.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..codes import LinearCode, homogeneous_linear_code, polynomial_code
from ..csp import MAX_EXACT_VARIABLES, MaxNandInstance, opt_exact
from ..distance import DEFAULT_BUDGET, min_distance_exact
from ..errors import DimensionMismatch, FieldMismatch, RedirectError, UsageError
from ..gf import FieldSpec, field_make
from ..prg import EvaluationSet
from ..progress import operation
from .artifact import (
    ReductionArtifact,
    ReductionParams,
    choose_r,
    mindist2_bounds,
    mindistq_bounds,
    project_solutions,
    solution_basis,
)
from .contexts import Mindist2Context, MindistqContext
from .layout import z_then_s_projection
from .mindist2 import mindist2_pipeline
from .mindistq import mindistq_pipeline

logger = logging.getLogger(__name__)


def measured_delta(psi: MaxNandInstance, *, threads: int = 1) -> Fraction | None:
    """``1 - Opt(psi)``, or ``None`` when ``n`` is too large to enumerate."""
    if psi.n > MAX_EXACT_VARIABLES:
        logger.warning("%s: too many variables to measure Opt; soundness floor omitted", psi)
        return None
    opt, _ = opt_exact(psi, threads=threads)
    return 1 - opt


def auto_r(psi: MaxNandInstance, N: int, q: int, delta: Fraction | None) -> int:
    """:func:`choose_r` with ``delta = 1`` whenever no positive gap is known."""
    gap = delta if delta is not None and delta > 0 else Fraction(1)
    return choose_r(N, psi.m, q, gap)


def distance_gap(C: LinearCode, *, budget: int = DEFAULT_BUDGET) -> Fraction:
    """``|d(C)/n - 1/2|``, the distance of ``C``'s relative distance from one half."""
    d = min_distance_exact(C, budget)
    if d.is_infinite:
        raise UsageError(f"{C.name} is the zero code")
    return abs(Fraction(int(d.distance), C.n) - Fraction(1, 2))


def _check_r(r: int) -> None:
    if r < 1:
        raise UsageError(f"repetition count must be at least 1, got {r}")


@operation("reduce", "Building the F_2 minimum distance instance")
def build_mindist2(
    psi: MaxNandInstance,
    C: LinearCode,
    r: int,
    *,
    delta: Fraction | None = None,
    epsilon: Fraction | None = None,
) -> ReductionArtifact:
    """The binary code whose minimum distance tracks ``Opt(psi)``.

    ``C`` must be a binary code of dimension exactly ``psi.n``.  When
    ``epsilon`` is omitted it is measured as :func:`distance_gap` of ``C``.

    Raises:
        FieldMismatch: If ``C`` is not binary.
        DimensionMismatch: If ``dim(C) != psi.n``.
        NotInjective: If the output projection is not injective.
    """
    F = field_make(2)
    if C.field != F:
        raise FieldMismatch(f"the binary construction needs a code over F_2, got {C.field}")
    if C.k != psi.n:
        raise DimensionMismatch(f"{C.name} has dimension {C.k}, instance has {psi.n} variables")
    _check_r(r)
    eps = epsilon if epsilon is not None else distance_gap(C)

    ctx = Mindist2Context(psi=psi, code=C, field=F)
    mindist2_pipeline.run(ctx)
    system = ctx.constraints()
    basis = solution_basis(system)
    projection = z_then_s_projection(ctx.layout, ctx.N, psi.m, r)
    code = project_solutions(basis, projection, name="mindist2")
    logger.info("mindist2 for %s with %s, r=%d: [%d, %d]", psi, C.name, r, code.n, code.k)

    return ReductionArtifact(
        kind="mindist2",
        psi=psi,
        params=ReductionParams(q=2, n=psi.n, m=psi.m, N=ctx.N, r=r),
        code=code,
        layout=ctx.layout,
        projection=tuple(projection),
        bounds=mindist2_bounds(ctx.N, psi.m, r, delta, eps),
        injective=True,
        basis=basis,
        system=system,
        encoder=C,
        provenance=system.provenance(),
    )


@operation("reduce", "Building the F_q minimum distance instance")
def build_mindistq(
    psi: MaxNandInstance,
    F: FieldSpec,
    R: EvaluationSet,
    r: int,
    *,
    delta: Fraction | None = None,
) -> ReductionArtifact:
    """The F_q code, ``q >= 3``, whose minimum distance tracks ``Opt(psi)``.

    Codes ``P_0, ..., P_{q-1}`` and the encoding code are all evaluated on
    ``R``, so ``N = |R|``.

    Raises:
        RedirectError: If ``q = 2``; use :func:`build_mindist2`.
        RankDeficient: If ``R`` does not separate linear forms.
        NotInjective: If the output projection is not injective.
    """
    if F.q == 2:
        raise RedirectError("q = 2 has its own construction: use the md2 target")
    if R.field != F or R.n != psi.n:
        raise DimensionMismatch(
            f"evaluation set lives in F_{R.field.q}^{R.n}, need F_{F.q}^{psi.n}"
        )
    _check_r(r)
    encoder = homogeneous_linear_code(F, psi.n, R)
    polynomial_codes = [polynomial_code(F, psi.n, e, R) for e in range(F.q)]

    ctx = MindistqContext(
        psi=psi, field=F, points=R, encoder=encoder, polynomial_codes=polynomial_codes
    )
    mindistq_pipeline.run(ctx)
    system = ctx.constraints()
    basis = solution_basis(system)
    projection = z_then_s_projection(ctx.layout, ctx.N, psi.m, r)
    code = project_solutions(basis, projection, name="mindistq")
    logger.info("mindistq for %s over %s, N=%d, r=%d: [%d, %d]", psi, F, ctx.N, r, code.n, code.k)

    return ReductionArtifact(
        kind="mindistq",
        psi=psi,
        params=ReductionParams(q=F.q, n=psi.n, m=psi.m, N=ctx.N, r=r),
        code=code,
        layout=ctx.layout,
        projection=tuple(projection),
        bounds=mindistq_bounds(ctx.N, psi.m, r, F.q, delta),
        injective=True,
        basis=basis,
        system=system,
        encoder=encoder,
        points=R,
        provenance=system.provenance(),
    )
