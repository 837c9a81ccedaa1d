# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Min Dist over F_q steps: tie the indicator blocks to the ``Y`` blocks.

The assignment is never a variable of its own: ``alpha_i`` is the linear
form ``decoder[i] @ Ye[1]``, and the constant 1 is ``Y_0``, entry
``(0, 0)`` of ``Yef[0][0]``.
"""

from __future__ import annotations

import numpy as np

from ...prg import exhaustive_set, monomial_matrix
from ..contexts import MindistqContext
from ..layout import s, ye, yef, z
from ..system import LinearForm, nand_gadget, single
from . import mindistq_pipeline


def _alpha(ctx: MindistqContext, i: int) -> LinearForm:
    assert ctx.encoder.decoder is not None
    row = ctx.encoder.decoder.entries[i]
    power = ctx.layout[ye(1)]
    return [(power.coord(t), int(row[t])) for t in range(ctx.N) if row[t]]


@mindistq_pipeline.step(order=800)
def nand_blocks(ctx: MindistqContext) -> None:
    system = ctx.constraints()
    y0 = ctx.layout[yef(0, 0)].coord(0, 0)
    alphas = [_alpha(ctx, v) for v in range(ctx.psi.n)]
    for c, (k, i, j) in enumerate(ctx.psi.constraints):
        nand_gadget(system, "nand", ctx.layout[s(c)], single(y0), alphas[i], alphas[j], alphas[k])


@mindistq_pipeline.step(order=900)
def moment_blocks(ctx: MindistqContext) -> None:
    """``sum_{x,y} x^e y^f Z[i][j](x, y) = Yef[e][f](i, j)`` for all ``e, f < q``."""
    system = ctx.constraints()
    F = ctx.field
    q = ctx.q
    exponents = [(e, f) for e in range(q) for f in range(q)]
    V = monomial_matrix(F, exhaustive_set(F, 2).points, exponents)
    # [V | -I] over (Z[i][j], Yef[.][.](i, j))
    M = np.concatenate([V, F.neg(np.eye(q * q, dtype=np.uint8))], axis=1)
    for i in range(ctx.N):
        for j in range(ctx.N):
            targets = [ctx.layout[yef(e, f)].coord(i, j) for e, f in exponents]
            cols = np.concatenate([ctx.layout[z(i, j)].coords(), np.array(targets, dtype=np.intp)])
            system.block_equations("moments", cols, M)
