# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The designed low-weight codeword of a satisfying assignment.

Every ``S`` block is the indicator of its constraint's inputs and every
``Z`` block the indicator of a pair of encoded coordinates, so each block
contributes exactly one nonzero entry.
"""

from __future__ import annotations

import logging

import numpy as np

from ..csp import Assignment, satisfied_count
from ..errors import InvariantFailure, MembershipFailure, NotSatisfying, UsageError
from ..linalg import Array, FVector
from .artifact import ReductionArtifact
from .layout import s, ye, yef, z

logger = logging.getLogger(__name__)


def _indicator_blocks(artifact: ReductionArtifact, v: Array, beta: Assignment) -> None:
    for c, (_k, i, j) in enumerate(artifact.psi.constraints):
        v[artifact.layout[s(c)].coord(beta[i], beta[j])] = 1


def _square_blocks(artifact: ReductionArtifact, v: Array, word: Array) -> None:
    N = artifact.params.N
    for i in range(N):
        for j in range(N):
            v[artifact.layout[z(i, j)].coord(int(word[i]), int(word[j]))] = 1


def _encoded(artifact: ReductionArtifact, beta: Assignment) -> Array:
    if artifact.encoder is None:
        raise UsageError(f"{artifact.kind} artifact carries no encoding code")
    C = artifact.encoder
    return C.encode(FVector(C.field, np.array(beta.bits, dtype=np.uint8))).entries


def intended_variables(artifact: ReductionArtifact, beta: Assignment) -> FVector:
    """Full variable vector of the intended codeword (no checks)."""
    F = artifact.field
    layout = artifact.layout
    v = np.zeros(layout.total, dtype=np.uint8)
    bits = np.array(beta.bits, dtype=np.uint8)
    _indicator_blocks(artifact, v, beta)

    if artifact.kind == "ncp2":
        v[layout["one"].start] = 1
        v[layout["x"].coords()] = bits
    elif artifact.kind == "mindist2":
        y = _encoded(artifact, beta)
        v[layout["x0"].start] = 1
        v[layout["x"].coords()] = bits
        v[layout["y"].coords()] = y
        v[layout["Y"].coords()] = np.outer(y, y).reshape(-1) & 1
        _square_blocks(artifact, v, y)
    else:
        c = _encoded(artifact, beta)
        q = F.q
        powers = [F.pow(c, e) for e in range(2 * (q - 1) + 1)]
        for e, values in enumerate(powers):
            v[layout[ye(e)].coords()] = values
        for e in range(q):
            for f in range(q):
                outer = F.mul_table[powers[e][:, None], powers[f][None, :]]
                v[layout[yef(e, f)].coords()] = outer.reshape(-1)
        _square_blocks(artifact, v, c)
    return FVector(F, v)


def intended_codeword(artifact: ReductionArtifact, beta: Assignment) -> FVector:
    """Output word of the intended codeword for a satisfying ``beta``.

    Raises:
        NotSatisfying: If ``beta`` violates a constraint.
        MembershipFailure: If the word is not in the constructed code.
        InvariantFailure: If its weight is not the completeness weight.
    """
    psi = artifact.psi
    if len(beta) != psi.n:
        raise UsageError(f"assignment has {len(beta)} bits, instance has {psi.n} variables")
    sat = satisfied_count(psi, beta)
    if sat < psi.m:
        raise NotSatisfying(f"assignment satisfies {sat} of {psi.m} constraints")

    full = intended_variables(artifact, beta)
    if artifact.system is not None:
        broken = artifact.system.violated(full)
        if broken:
            raise MembershipFailure(f"intended vector violates {', '.join(broken)}")
    word = artifact.project(full)
    target = artifact.affine if artifact.affine is not None else artifact.code
    if not target.contains(word):
        raise MembershipFailure(f"intended word is not in the {artifact.kind} output")

    expected = artifact.bounds.completeness_weight
    if word.weight != expected:
        raise InvariantFailure(f"intended word has weight {word.weight}, expected {expected}")
    logger.info("intended %s codeword has weight %d", artifact.kind, word.weight)
    return word
