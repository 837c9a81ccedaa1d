# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Binary Min Dist step: declare the variable blocks.

``x0`` plays the constant 1, ``x`` the assignment, ``y = C(x)`` its
encoding and ``Y`` the matrix ``y y^T``.  ``S[c]`` is the indicator of
the inputs of constraint ``c`` and ``Z[i][j]`` the indicator of
``(y_i, y_j)``.
"""

from ..contexts import Mindist2Context
from ..layout import s, z
from ..system import ConstraintSystem
from . import mindist2_pipeline


@mindist2_pipeline.step(order=100)
def declare_variables(ctx: Mindist2Context) -> None:
    layout = ctx.layout
    N = ctx.N
    layout.add("x0", (1,))
    layout.add("x", (ctx.psi.n,))
    layout.add("y", (N,))
    layout.add("Y", (N, N))
    for c in range(ctx.psi.m):
        layout.add(s(c), (2, 2))
    for i in range(N):
        for j in range(N):
            layout.add(z(i, j), (2, 2))
    ctx.system = ConstraintSystem(ctx.field, layout)
