# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Reductions from Max NAND to nearest codeword and minimum distance problems."""

from .artifact import (
    Bounds,
    ReductionArtifact,
    ReductionParams,
    choose_r,
    tensor_boost,
)
from .builders import auto_r, build_mindist2, build_mindistq, distance_gap, measured_delta
from .diagnostics import (
    CaseFloor,
    CaseSplitCertificate,
    DiagnosticReport,
    case1_structure,
    case_split_floor,
    check_f2_inverse_formulas,
    check_invertibility,
)
from .intended import intended_codeword, intended_variables
from .layout import Block, ProjectionEntry, VariableLayout
from .ncp2 import build_ncp2
from .system import ConstraintSystem

__all__ = [
    "Block",
    "Bounds",
    "CaseFloor",
    "CaseSplitCertificate",
    "ConstraintSystem",
    "DiagnosticReport",
    "ProjectionEntry",
    "ReductionArtifact",
    "ReductionParams",
    "VariableLayout",
    "auto_r",
    "build_mindist2",
    "build_mindistq",
    "build_ncp2",
    "case1_structure",
    "case_split_floor",
    "check_f2_inverse_formulas",
    "check_invertibility",
    "choose_r",
    "distance_gap",
    "intended_codeword",
    "intended_variables",
    "measured_delta",
    "tensor_boost",
]
