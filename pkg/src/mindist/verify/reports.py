# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""JSON reports emitted by checks, experiments and distance runs.

Every report is a frozen pydantic model.  ``runtime_ms`` is the only
field that differs between two identical runs.
"""

from __future__ import annotations

from typing import Literal

from pydantic import Field

from ..formats import BoundsModel, Document, FractionStr
from ..reduction import CaseSplitCertificate

Mode = Literal["exhaustive", "sampled"]
Relation = Literal[">=", "<=", "=="]
Param = int | str | float


class LemmaReport(Document):
    """Outcome of one oracle check.

    ``measured`` is ``None`` when the measured quantity is unbounded (an
    empty code has no minimum weight), which satisfies every lower bound.
    Sampled reports are advisory: they can miss a violation.
    """

    id: str
    check: str
    params: dict[str, Param]
    relation: Relation
    claimed: FractionStr | None
    measured: FractionStr | None
    witness: list[int] | None = None
    mode: Mode = "exhaustive"
    samples: int | None = None
    seed: int | None = None
    passed: bool = Field(alias="pass")
    runtime_ms: float = 0.0
    notes: list[str] = []

    @property
    def advisory(self) -> bool:
        return self.mode == "sampled"


class CaseModel(Document):
    case: int
    description: str
    floor: FractionStr | None
    method: str


def certificate_cases(cert: CaseSplitCertificate) -> list[CaseModel]:
    """Cases of a certificate; an unbounded floor is written as ``null``."""
    return [
        CaseModel(
            case=c.case,
            description=c.description,
            floor=None if c.floor == float("inf") else int(c.floor),
            method=c.method,
        )
        for c in cert.cases
    ]


class ExperimentReport(Document):
    """Outcome of one end-to-end reduction experiment."""

    id: str
    experiment: Literal["completeness", "soundness", "goodcode"]
    kind: Literal["ncp2", "mindist2", "mindistq"]
    q: int
    n: int
    m: int
    N: int
    r: int
    output_length: int
    dimension: int
    evaluation_set: str | None = None
    opt: FractionStr | None = None
    bounds: BoundsModel
    active_branch: Literal["assignment", "structure"] | None = None
    intended_weight: int | None = None
    measured_distance: int | None = None
    distance_method: Literal["exact-enumeration", "case-split"] | None = None
    certificate: list[CaseModel] | None = None
    dimension_bound: int | None = None
    rate: float | None = None
    relative_distance: float | None = None
    checks: dict[str, bool] = {}
    passed: bool = Field(alias="pass")
    runtime_ms: float = 0.0
    notes: list[str] = []


class DistanceDocument(Document):
    """Result of ``mindist distance``."""

    code: str
    q: int
    n: int
    k: int
    affine: bool
    distance: int | None
    witness: list[int] | None
    method: str
    enumerated: int
    passed: bool = Field(alias="pass")
    runtime_ms: float = 0.0


class SuiteReport(Document):
    """Reports of an experiment plan, ordered by id."""

    plan: str
    checks: list[LemmaReport] = []
    experiments: list[ExperimentReport] = []
    passed: bool = Field(alias="pass")
    runtime_ms: float = 0.0
