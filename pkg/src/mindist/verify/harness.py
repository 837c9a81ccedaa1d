# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Run checks by name, concurrently, and experiment plans from YAML.

Check names and the parameters they take:

==================== =================================================
check                parameters
==================== =================================================
power-sums           q (every supported order when omitted)
moment-support       q, d (every legal d when omitted)
moment-support-high  q, d (every legal d when omitted)
zero-diagonal        code
pair-support         code
tensor-distance      code, code2
symmetric-dimension  code
zero-fraction        q, n, d (every legal d when omitted)
nonzero-fraction     q, n, e, points, bias
fooling              q, n, d, points, bias
sum-fooling          q, n, d, bias
==================== =================================================

Codes are named ``simplex:N``, ``hamming:R``, ``rep:Q:N``,
``identity:Q:N``, ``random:Q:N:K:SEED`` or a path to a ``gfcode`` file.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from ..codes import (
    LinearCode,
    hamming_code,
    identity_code,
    random_code,
    repetition_code,
    simplex_code,
)
from ..config import MindistConfig
from ..csp import MaxNandInstance
from ..errors import BudgetExceeded, InvariantFailure, ParseError, UsageError
from ..formats import read_gfcode, read_maxnand
from ..gf import SUPPORTED_ORDERS, field_make
from ..prg import (
    MAX_POLYNOMIALS,
    EvaluationSet,
    exhaustive_set,
    monomials,
    small_bias_set,
    viola_sum,
)
from ..progress import NullProgressReporter, ProgressReporter, operation
from ..run_options import RunOptions, parse_run_options
from . import checks
from .experiments import (
    build_artifact,
    experiment_completeness,
    experiment_goodcode,
    experiment_soundness,
)
from .reports import ExperimentReport, LemmaReport, SuiteReport

logger = logging.getLogger(__name__)

CHECK_NAMES = (
    "power-sums",
    "moment-support",
    "moment-support-high",
    "zero-diagonal",
    "pair-support",
    "tensor-distance",
    "symmetric-dimension",
    "zero-fraction",
    "nonzero-fraction",
    "fooling",
    "sum-fooling",
)

EXPERIMENT_NAMES = ("completeness", "soundness", "goodcode")

CheckTask = Callable[[], list[LemmaReport]]


# =============================================================================
# Inputs
# =============================================================================


def resolve_code(spec: str) -> LinearCode:
    """Build the code a ``kind:args`` string names, or read a ``gfcode`` file."""
    kind, _, rest = spec.partition(":")
    try:
        args = [int(a) for a in rest.split(":")] if rest else []
    except ValueError:
        args = None
    if args is not None:
        match kind, args:
            case "simplex", [n]:
                return simplex_code(n)
            case "hamming", [r]:
                return hamming_code(r)
            case "rep", [q, n]:
                return repetition_code(field_make(q), n)
            case "identity", [q, n]:
                return identity_code(field_make(q), n)
            case "random", [q, n, k, seed]:
                return random_code(field_make(q), n, k, seed)
    path = Path(spec)
    if path.exists():
        return read_gfcode(path)
    raise UsageError(f"Unknown code '{spec}'")


def _points(q: int, n: int, points: str, bias: float) -> EvaluationSet:
    F = field_make(q)
    if points == "exhaustive":
        return exhaustive_set(F, n)
    base = small_bias_set(F, n, bias)
    if points == "small-bias":
        return base
    if points == "viola":
        return viola_sum(base, q - 1)
    raise UsageError(f"Unknown evaluation set '{points}'")


def _require(params: dict[str, Any], *keys: str) -> list[Any]:
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def _orders(params: dict[str, Any]) -> list[int]:
    q = params.get("q")
    return list(SUPPORTED_ORDERS) if q is None else [int(q)]


# =============================================================================
# Checks
# =============================================================================


def run_check(
    name: str,
    params: dict[str, Any],
    *,
    budget: int = 1 << 24,
    samples: int = checks.DEFAULT_SAMPLES,
    seed: int = checks.DEFAULT_SEED,
    reporter: ProgressReporter | None = None,
) -> list[LemmaReport]:
    """Run check ``name``; omitted degree (or order) parameters run every
    legal value.

    Raises:
        UsageError: If the check is unknown or a parameter is missing.
    """
    reporter = reporter or NullProgressReporter()
    sampling = {"samples": samples, "seed": seed, "reporter": reporter}

    if name == "power-sums":
        return [checks.check_power_sums(field_make(q)) for q in _orders(params)]

    if name in ("moment-support", "moment-support-high"):
        (q,) = _require(params, "q")
        F = field_make(int(q))
        low = name == "moment-support"
        degrees = range(F.q) if low else range(F.q - 1, 2 * (F.q - 1) + 1)
        if params.get("d") is not None:
            degrees = range(int(params["d"]), int(params["d"]) + 1)
        check = checks.check_low_moment_support if low else checks.check_high_moment_support
        return [check(F, d, budget=budget, **sampling) for d in degrees]

    if name == "zero-diagonal":
        (code,) = _require(params, "code")
        return [checks.check_zero_diagonal_weight(resolve_code(code), budget=budget, reporter=reporter)]
    if name == "pair-support":
        (code,) = _require(params, "code")
        return [checks.check_pair_support(resolve_code(code), budget=budget)]
    if name == "tensor-distance":
        code, code2 = _require(params, "code", "code2")
        return [checks.check_tensor_distance(resolve_code(code), resolve_code(code2), budget=budget)]
    if name == "symmetric-dimension":
        (code,) = _require(params, "code")
        return [checks.check_symmetric_dimension(resolve_code(code))]

    if name == "zero-fraction":
        q, n = _require(params, "q", "n")
        F = field_make(int(q))
        degrees = range(F.q) if params.get("d") is None else [int(params["d"])]
        return [checks.check_zero_fraction(F, int(n), d, **sampling) for d in degrees]

    points = str(params.get("points") or "exhaustive")
    bias = float(params.get("bias") or 0.25)
    if name == "nonzero-fraction":
        q, n, e = _require(params, "q", "n", "e")
        R = _points(int(q), int(n), points, bias)
        return [checks.check_nonzero_fraction(R, int(e), reporter=reporter)]
    if name == "fooling":
        q, n, d = _require(params, "q", "n", "d")
        R = _points(int(q), int(n), points, bias)
        claim = _fooling_claim(points, int(d), bias)
        if R.field.q ** len(monomials(R.field, R.n, int(d))) <= MAX_POLYNOMIALS:
            return [checks.check_fooling(R, int(d), claim, reporter=reporter)]
        return [checks.check_fooling(R, int(d), claim, **sampling)]
    if name == "sum-fooling":
        q, n, d = _require(params, "q", "n", "d")
        base = small_bias_set(field_make(int(q)), int(n), bias)
        return [checks.check_sum_fooling(base, int(d), reporter=reporter)]

    raise UsageError(f"Unknown check '{name}'; known checks: {', '.join(CHECK_NAMES)}")


def _fooling_claim(points: str, d: int, bias: float) -> Fraction | None:
    """What a set of this kind promises at degree ``d``; ``None`` records only."""
    if points == "exhaustive":
        return Fraction(0)
    if d == 1:
        return Fraction(bias).limit_denominator(1 << 20)
    return None


def run_checks(tasks: Iterable[CheckTask], *, threads: int = 1) -> list[LemmaReport]:
    """Run independent check tasks on ``threads`` workers; reports sorted by id."""
    tasks = list(tasks)
    if threads <= 1:
        results = [task() for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda task: task(), tasks))
    reports = [r for batch in results for r in batch]
    return sorted(reports, key=lambda r: r.id)


def failures(reports: Iterable[LemmaReport]) -> list[LemmaReport]:
    """Reports that did not pass.

    A sampled pass is advisory, but a sampled failure carries a real
    counterexample, so both kinds count.
    """
    return [r for r in reports if not r.passed]


def enforce(reports: Iterable[LemmaReport]) -> None:
    """Raise on any failed report.

    Raises:
        InvariantFailure: Naming every failing report.
    """
    failed = failures(reports)
    if failed:
        raise InvariantFailure(f"checks failed: {', '.join(r.id for r in failed)}")


# =============================================================================
# Experiment plans
# =============================================================================


def run_experiment(
    name: str,
    psi: MaxNandInstance,
    opts: RunOptions,
    *,
    label: str = "instance",
    reporter: ProgressReporter | None = None,
) -> ExperimentReport:
    if name == "completeness":
        return experiment_completeness(psi, opts, label=label, reporter=reporter)
    if name == "soundness":
        return experiment_soundness(psi, opts, label=label, reporter=reporter)
    if name == "goodcode":
        artifact = build_artifact(psi, opts)
        return experiment_goodcode(artifact, opts, label=label, reporter=reporter)
    raise UsageError(f"Unknown experiment '{name}'; known: {', '.join(EXPERIMENT_NAMES)}")


def _load_plan(path: Path) -> dict[str, Any]:
    try:
        plan = yaml.safe_load(path.read_text())
    except OSError as e:
        raise UsageError(f"Cannot read plan {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ParseError(f"{path}: {e}") from e
    if plan is None:
        plan = {}
    if not isinstance(plan, dict) or set(plan) - {"checks", "experiments"}:
        raise ParseError(f"{path}: a plan is a mapping with 'checks' and 'experiments' lists")
    return plan


def _plan_check(entry: dict[str, Any], opts: RunOptions) -> CheckTask:
    params = dict(entry)
    name = params.pop("check", None)
    if name not in CHECK_NAMES:
        raise UsageError(f"plan check entry needs a known 'check', got {name!r}")
    return lambda: run_check(
        name, params, budget=opts.budget, samples=opts.samples, seed=opts.seed
    )


@operation("suite", "Running experiment plan")
def run_plan(
    plan_path: Path,
    config: MindistConfig | None = None,
    *,
    reporter: ProgressReporter | None = None,
) -> SuiteReport:
    """Run every check and experiment a YAML plan lists.

    Instance paths are relative to the plan.  Each experiment entry may
    carry ``options`` validated like command-line options.  A soundness
    run whose case split falls short contributes its partial report.
    """
    started = time.perf_counter()
    plan = _load_plan(plan_path)
    defaults = parse_run_options({}, config)

    tasks = [_plan_check(entry, defaults) for entry in plan.get("checks") or []]
    lemma_reports = run_checks(tasks, threads=defaults.threads)

    experiments: list[ExperimentReport] = []
    for entry in plan.get("experiments") or []:
        name, instance = entry.get("experiment"), entry.get("instance")
        if name not in EXPERIMENT_NAMES or not instance:
            raise UsageError(f"plan experiment entry needs 'experiment' and 'instance': {entry}")
        opts = parse_run_options(dict(entry.get("options") or {}), config)
        path = plan_path.parent / instance
        psi = read_maxnand(path)
        try:
            report = run_experiment(name, psi, opts, label=path.stem, reporter=reporter)
        except BudgetExceeded as e:
            if not isinstance(e.partial, ExperimentReport):
                raise
            report = e.partial
        experiments.append(report)

    experiments.sort(key=lambda r: r.id)
    passed = not failures(lemma_reports) and all(r.passed for r in experiments)
    return SuiteReport(
        plan=str(plan_path),
        checks=lemma_reports,
        experiments=experiments,
        passed=passed,
        runtime_ms=round((time.perf_counter() - started) * 1000, 3),
    )
