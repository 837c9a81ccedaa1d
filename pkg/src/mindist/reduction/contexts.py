# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Context dataclasses passed through the reduction pipelines."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from ..codes import EncodingCode, LinearCode
from ..csp import MaxNandInstance
from ..gf import FieldSpec
from ..prg import EvaluationSet
from .layout import VariableLayout
from .system import ConstraintSystem


@dataclass
class Mindist2Context:
    """Context for the binary Min Dist construction.

    The variable-declaration step fills ``layout`` and ``system``; every
    later step only appends equations.
    """

    psi: MaxNandInstance
    code: LinearCode
    field: FieldSpec

    layout: VariableLayout = dataclasses.field(default_factory=VariableLayout)
    system: ConstraintSystem | None = None

    @property
    def N(self) -> int:
        return self.code.n

    def constraints(self) -> ConstraintSystem:
        assert self.system is not None, "variables not declared yet"
        return self.system


@dataclass
class MindistqContext:
    """Context for the Min Dist construction over F_q, ``q >= 3``.

    ``polynomial_codes[e]`` is ``P_e`` for ``0 <= e <= q - 1``; ``encoder``
    is the homogeneous linear code on the same evaluation set, whose
    decoder turns ``Y^1`` into the assignment coordinates.
    """

    psi: MaxNandInstance
    field: FieldSpec
    points: EvaluationSet
    encoder: EncodingCode
    polynomial_codes: list[LinearCode]

    layout: VariableLayout = dataclasses.field(default_factory=VariableLayout)
    system: ConstraintSystem | None = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def N(self) -> int:
        return len(self.points)

    def constraints(self) -> ConstraintSystem:
        assert self.system is not None, "variables not declared yet"
        return self.system
