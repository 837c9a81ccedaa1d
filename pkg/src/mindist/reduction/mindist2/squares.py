# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Binary Min Dist step: tie every ``Z[i][j]`` to ``x0``, ``y_i``, ``y_j`` and ``Y_ij``."""

from ..contexts import Mindist2Context
from ..layout import z
from ..system import (
    PATTERN_BOTH,
    PATTERN_FIRST,
    PATTERN_SECOND,
    PATTERN_SUM,
    pattern_gadget,
    single,
)
from . import mindist2_pipeline


@mindist2_pipeline.step(order=300)
def square_blocks(ctx: Mindist2Context) -> None:
    """``Z[i][j]`` sums to ``x0`` and its marginals are ``y_i``, ``y_j``; ``Z(1,1) = Y_ij``."""
    system = ctx.constraints()
    layout = ctx.layout
    x0 = layout["x0"].start
    y = layout["y"]
    Y = layout["Y"]
    for i in range(ctx.N):
        for j in range(ctx.N):
            pattern_gadget(
                system,
                "square",
                layout[z(i, j)],
                (
                    (PATTERN_SUM, single(x0)),
                    (PATTERN_FIRST, single(y.coord(i))),
                    (PATTERN_SECOND, single(y.coord(j))),
                    (PATTERN_BOTH, single(Y.coord(i, j))),
                ),
            )
