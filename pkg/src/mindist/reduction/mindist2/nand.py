# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Binary Min Dist step: one NAND gadget per constraint, against ``x0``."""

from ..contexts import Mindist2Context
from ..layout import s
from ..system import nand_gadget, single
from . import mindist2_pipeline


@mindist2_pipeline.step(order=200)
def nand_blocks(ctx: Mindist2Context) -> None:
    system = ctx.constraints()
    layout = ctx.layout
    x0 = layout["x0"].start
    x = layout["x"]
    for c, (k, i, j) in enumerate(ctx.psi.constraints):
        nand_gadget(
            system,
            "nand",
            layout[s(c)],
            single(x0),
            single(x.coord(i)),
            single(x.coord(j)),
            single(x.coord(k)),
        )
