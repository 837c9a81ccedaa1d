# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Oracle checks and end-to-end experiments."""

from .experiments import (
    build_artifact,
    evaluation_set,
    experiment_completeness,
    experiment_goodcode,
    experiment_soundness,
)
from .harness import (
    CHECK_NAMES,
    EXPERIMENT_NAMES,
    enforce,
    failures,
    resolve_code,
    run_check,
    run_checks,
    run_experiment,
    run_plan,
)
from .reports import DistanceDocument, ExperimentReport, LemmaReport, SuiteReport

__all__ = [
    "CHECK_NAMES",
    "EXPERIMENT_NAMES",
    "DistanceDocument",
    "ExperimentReport",
    "LemmaReport",
    "SuiteReport",
    "build_artifact",
    "enforce",
    "evaluation_set",
    "experiment_completeness",
    "experiment_goodcode",
    "experiment_soundness",
    "failures",
    "resolve_code",
    "run_check",
    "run_checks",
    "run_experiment",
    "run_plan",
]
