# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Binary Min Dist steps: ``y`` encodes ``x`` and ``Y`` behaves like ``y y^T``."""

from __future__ import annotations

import numpy as np

from ...linalg import kronecker, nullspace_matrix
from ..contexts import Mindist2Context
from . import mindist2_pipeline


@mindist2_pipeline.step(order=400)
def encoding_in_code(ctx: Mindist2Context) -> None:
    ctx.constraints().member_of("y-in-code", ctx.layout["y"].coords(), ctx.code.parity_check)


@mindist2_pipeline.step(order=500)
def encoding_of_assignment(ctx: Mindist2Context) -> None:
    """``y = x @ G``."""
    system = ctx.constraints()
    F = ctx.field
    x = ctx.layout["x"]
    y = ctx.layout["y"]
    G = ctx.code.G.entries
    for t in range(ctx.N):
        terms = [(y.coord(t), 1)]
        terms.extend((x.coord(i), F.neg(int(G[i, t]))) for i in range(ctx.psi.n) if G[i, t])
        system.equation("y-encodes-x", terms)


@mindist2_pipeline.step(order=600)
def square_in_tensor_code(ctx: Mindist2Context) -> None:
    H = nullspace_matrix(kronecker(ctx.code.G, ctx.code.G))
    ctx.constraints().member_of("Y-in-tensor", ctx.layout["Y"].coords(), H)


@mindist2_pipeline.step(order=700)
def square_diagonal(ctx: Mindist2Context) -> None:
    system = ctx.constraints()
    y = ctx.layout["y"]
    Y = ctx.layout["Y"]
    for t in range(ctx.N):
        system.equal("Y-diagonal", Y.coord(t, t), y.coord(t))


@mindist2_pipeline.step(order=800)
def square_symmetric(ctx: Mindist2Context) -> None:
    system = ctx.constraints()
    Y = ctx.layout["Y"]
    upper_i, upper_j = np.triu_indices(ctx.N, k=1)
    for i, j in zip(upper_i.tolist(), upper_j.tolist(), strict=True):
        system.equal("Y-symmetric", Y.coord(i, j), Y.coord(j, i))
