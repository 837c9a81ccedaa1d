# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Min Dist over F_q steps: constraints among the ``Y`` blocks alone."""

from __future__ import annotations

import numpy as np

from ...linalg import kronecker, nullspace_matrix
from ..contexts import MindistqContext
from ..layout import ye, yef
from . import mindistq_pipeline


@mindistq_pipeline.step(order=200)
def powers_in_polynomial_codes(ctx: MindistqContext) -> None:
    """``Ye[e]`` lies in ``P_e`` for ``e <= q - 1``."""
    system = ctx.constraints()
    for e in range(ctx.q):
        P = ctx.polynomial_codes[e]
        system.member_of(f"Ye[{e}]-in-P", ctx.layout[ye(e)].coords(), P.parity_check)


@mindistq_pipeline.step(order=300)
def wrapped_powers(ctx: MindistqContext) -> None:
    """``x^e = x^(e - (q-1))`` on F_q for ``e >= q``."""
    system = ctx.constraints()
    q = ctx.q
    for e in range(q, 2 * (q - 1) + 1):
        high = ctx.layout[ye(e)]
        low = ctx.layout[ye(e - (q - 1))]
        for t in range(ctx.N):
            system.equal("Ye-wrap", high.coord(t), low.coord(t))


@mindistq_pipeline.step(order=400)
def products_in_tensor_codes(ctx: MindistqContext) -> None:
    """``Yef[e][f]`` lies in ``P_e (x) P_f``."""
    system = ctx.constraints()
    codes = ctx.polynomial_codes
    for e in range(ctx.q):
        for f in range(ctx.q):
            H = nullspace_matrix(kronecker(codes[e].G, codes[f].G))
            system.member_of("Yef-in-tensor", ctx.layout[yef(e, f)].coords(), H)


@mindistq_pipeline.step(order=500)
def product_diagonals(ctx: MindistqContext) -> None:
    """The diagonal of ``Yef[e][f]`` equals ``Ye[e + f]``."""
    system = ctx.constraints()
    for e in range(ctx.q):
        for f in range(ctx.q):
            Y = ctx.layout[yef(e, f)]
            power = ctx.layout[ye(e + f)]
            for t in range(ctx.N):
                system.equal("Yef-diagonal", Y.coord(t, t), power.coord(t))


@mindistq_pipeline.step(order=600)
def constant_factor_products(ctx: MindistqContext) -> None:
    """Rows of ``Yef[0][e]`` are all equal, and so are columns of ``Yef[e][0]``.

    With ``e = 0`` both hold, so every entry of ``Yef[0][0]`` equals ``Y_0``.
    """
    system = ctx.constraints()
    N = ctx.N
    for e in range(ctx.q):
        rows = ctx.layout[yef(0, e)]
        cols = ctx.layout[yef(e, 0)]
        for i in range(1, N):
            for j in range(N):
                system.equal("Y0e-rows", rows.coord(i, j), rows.coord(0, j))
                system.equal("Ye0-columns", cols.coord(j, i), cols.coord(j, 0))


@mindistq_pipeline.step(order=700)
def top_product_symmetric(ctx: MindistqContext) -> None:
    system = ctx.constraints()
    top = ctx.layout[yef(ctx.q - 1, ctx.q - 1)]
    upper_i, upper_j = np.triu_indices(ctx.N, k=1)
    for i, j in zip(upper_i.tolist(), upper_j.tolist(), strict=True):
        system.equal("Ytop-symmetric", top.coord(i, j), top.coord(j, i))
