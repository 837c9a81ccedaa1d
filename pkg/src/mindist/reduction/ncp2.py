# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Max NAND to the nearest codeword problem over F_2.

Each constraint ``x_k = NAND(x_i, x_j)`` gets a block ``S`` of four
variables meant to be the indicator of ``(x_i, x_j)``:

    S(0,0) + S(0,1) + S(1,0) + S(1,1) = 1
    S(1,0) + S(1,1)                   = x_i
    S(0,1) + S(1,1)                   = x_j
    S(0,0) + S(0,1) + S(1,0)          = x_k

The constant 1 is a dedicated ``one`` column pinned to 1, so the
solution set is a coset; its projection to the ``S`` blocks is the output.
A satisfied constraint admits a weight-1 block, a violated one forces
weight 3.
"""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from ..codes import AffineSubspace
from ..csp import MaxNandInstance
from ..gf import field_make
from ..linalg import FMatrix, FVector, nullspace_matrix, solve, vstack
from ..progress import operation
from .artifact import ReductionArtifact, ReductionParams, ncp2_bounds, project_solutions
from .layout import ProjectionEntry, VariableLayout, s
from .system import ConstraintSystem, nand_gadget, single

logger = logging.getLogger(__name__)


@operation("reduce", "Building the F_2 nearest codeword instance")
def build_ncp2(psi: MaxNandInstance, *, delta: Fraction | None = None) -> ReductionArtifact:
    """The affine subspace of F_2^{4m} whose minimum weight tracks ``Opt(psi)``.

    ``delta``, when known, is ``1 - Opt(psi)`` and fixes the soundness floor
    recorded in the artifact.

    Raises:
        NotInjective: If the ``S`` blocks do not determine the assignment.
    """
    F = field_make(2)
    layout = VariableLayout()
    one = layout.add("one", (1,))
    x = layout.add("x", (psi.n,))
    for c in range(psi.m):
        layout.add(s(c), (2, 2))

    system = ConstraintSystem(F, layout)
    for c, (k, i, j) in enumerate(psi.constraints):
        nand_gadget(
            system,
            "nand",
            layout[s(c)],
            single(one.start),
            single(x.coord(i)),
            single(x.coord(j)),
            single(x.coord(k)),
        )

    pin = np.zeros((1, layout.total), dtype=np.uint8)
    pin[0, one.start] = 1
    pinned = vstack(system.matrix(), FMatrix(F, pin))
    rhs = np.zeros(pinned.rows, dtype=np.uint8)
    rhs[-1] = 1
    particular = solve(pinned, FVector(F, rhs))
    basis = nullspace_matrix(pinned)

    projection = [
        ProjectionEntry(int(v), 1) for c in range(psi.m) for v in layout[s(c)].coords()
    ]
    code = project_solutions(basis, projection, name="ncp2")
    offset = FVector(F, particular.entries[[e.source for e in projection]])
    logger.info("ncp2 for %s: [%d, %d] coset", psi, code.n, code.k)

    return ReductionArtifact(
        kind="ncp2",
        psi=psi,
        params=ReductionParams(q=2, n=psi.n, m=psi.m, N=0, r=1),
        code=code,
        layout=layout,
        projection=tuple(projection),
        bounds=ncp2_bounds(psi.m, delta),
        injective=True,
        basis=basis,
        system=system,
        affine=AffineSubspace(code, offset),
        particular=particular,
        provenance=system.provenance(),
    )
