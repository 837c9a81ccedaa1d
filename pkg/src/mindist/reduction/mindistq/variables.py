# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Min Dist over F_q step: declare the variable blocks.

For a satisfying assignment ``alpha`` with encoding ``c = C(alpha)``:
``Ye[e]`` is meant to be ``c^e`` (entrywise, ``0 <= e <= 2(q-1)``),
``Yef[e][f]`` the matrix ``c_i^e c_j^f``, ``Z[i][j]`` the indicator of
``(c_i, c_j)`` on F_q^2 and ``S[c]`` the indicator of the inputs of
constraint ``c`` on {0, 1}^2.
"""

from ..contexts import MindistqContext
from ..layout import s, ye, yef, z
from ..system import ConstraintSystem
from . import mindistq_pipeline


@mindistq_pipeline.step(order=100)
def declare_variables(ctx: MindistqContext) -> None:
    layout = ctx.layout
    q, N = ctx.q, ctx.N
    for e in range(2 * (q - 1) + 1):
        layout.add(ye(e), (N,))
    for e in range(q):
        for f in range(q):
            layout.add(yef(e, f), (N, N))
    for i in range(N):
        for j in range(N):
            layout.add(z(i, j), (q, q))
    for c in range(ctx.psi.m):
        layout.add(s(c), (2, 2))
    ctx.system = ConstraintSystem(ctx.field, layout)
