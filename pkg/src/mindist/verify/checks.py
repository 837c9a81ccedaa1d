# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Brute-force oracles for the combinatorial facts the reductions rest on.

Each check measures a quantity exactly (or, past its budget, on a seeded
sample) and compares it with the bound the construction relies on.  An
exhaustive check that fails means an implementation bug, not a
counterexample.
"""

from __future__ import annotations

import logging
import math
import time
from fractions import Fraction

import numpy as np

from ..codes import (
    LinearCode,
    fact4_min_union,
    moment_code,
    symmetric_subcode,
    symmetric_zero_diag_subcode,
    tensor,
)
from ..distance import DEFAULT_BUDGET, min_distance_exact
from ..errors import BudgetExceeded, UsageError
from ..gf import FieldSpec, generator, power_sum
from ..linalg import FMatrix, _matmul_array, messages
from ..prg import (
    MAX_POLYNOMIALS,
    EvaluationSet,
    exhaustive_set,
    monomial_matrix,
    monomials,
    verify_fooling,
    verify_nonzero_fraction,
    viola_sum,
)
from ..progress import NullProgressReporter, ProgressReporter
from .reports import LemmaReport, Mode, Param, Relation

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 0


def _holds(relation: Relation, measured: Fraction | None, claimed: Fraction | None) -> bool:
    if claimed is None:
        return True
    if measured is None:
        return relation == ">="
    if relation == ">=":
        return measured >= claimed
    if relation == "<=":
        return measured <= claimed
    return measured == claimed


def _finite(value: int | float) -> Fraction | None:
    return None if value == math.inf else Fraction(int(value))


def _make(
    check: str,
    params: dict[str, Param],
    relation: Relation,
    claimed: Fraction | None,
    measured: Fraction | None,
    started: float,
    *,
    witness: np.ndarray | None = None,
    mode: Mode = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    extra: bool = True,
    notes: list[str] | None = None,
) -> LemmaReport:
    key = ",".join(f"{k}={v}" for k, v in params.items())
    passed = extra and _holds(relation, measured, claimed)
    report = LemmaReport(
        id=f"{check}[{key}]",
        check=check,
        params=params,
        relation=relation,
        claimed=claimed,
        measured=measured,
        witness=None if witness is None else [int(x) for x in witness],
        mode=mode,
        samples=samples,
        seed=seed,
        passed=passed,
        runtime_ms=round((time.perf_counter() - started) * 1000, 3),
        notes=notes or [],
    )
    level = logging.INFO if passed else logging.WARNING
    logger.log(level, "%s: measured %s %s %s -> %s", report.id, measured, relation, claimed,
               "pass" if passed else "FAIL")
    return report


# =============================================================================
# Field facts
# =============================================================================


def check_power_sums(F: FieldSpec) -> LemmaReport:
    """``sum_x x^a = 0`` for ``0 <= a <= q-2`` and ``-1`` for ``a = q-1``.

    Also confirms that the powers of :func:`~mindist.gf.generator` run
    through every nonzero element.
    """
    started = time.perf_counter()
    wrong = [a for a in range(F.q - 1) if power_sum(F, a) != 0]
    top = power_sum(F, F.q - 1)
    g = generator(F)
    cycle = {F.pow(g, i) for i in range(F.q - 1)}
    notes = [f"generator {g}", f"sum of x^{F.q - 1} is {top}"]
    return _make(
        "power-sums",
        {"q": F.q},
        "==",
        Fraction(0),
        Fraction(len(wrong)),
        started,
        witness=np.array(wrong) if wrong else None,
        extra=top == F.neg(1) and len(cycle) == F.q - 1,
        notes=notes,
    )


# =============================================================================
# Moment codes
# =============================================================================


def _sampled_min_weight(C: LinearCode, samples: int, seed: int) -> tuple[int | float, np.ndarray | None]:
    rng = np.random.default_rng(seed)
    msgs = rng.integers(0, C.field.q, size=(samples, C.k), dtype=np.uint8)
    words = _matmul_array(C.field, msgs, C.G.entries)
    weights = np.count_nonzero(words, axis=1)
    live = np.flatnonzero(weights)
    if live.size == 0:
        return math.inf, None
    best = live[int(np.argmin(weights[live]))]
    return int(weights[best]), words[best]


def _min_support(
    C: LinearCode, budget: int, samples: int, seed: int, reporter: ProgressReporter
) -> tuple[int | float, np.ndarray | None, Mode]:
    try:
        d = min_distance_exact(C, budget, reporter=reporter)
    except BudgetExceeded:
        logger.warning("%s has %d^%d words; sampling %d of them", C.name, C.field.q, C.k, samples)
        weight, witness = _sampled_min_weight(C, samples, seed)
        return weight, witness, "sampled"
    witness = None if d.witness is None else d.witness.entries
    return d.distance, witness, "exhaustive"


def check_low_moment_support(
    F: FieldSpec,
    d: int,
    *,
    budget: int = 1 << 24,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    reporter: ProgressReporter | None = None,
) -> LemmaReport:
    """Nonzero ``f: F_q^2 -> F_q`` with vanishing moments below degree ``d``
    has at least ``d + 1`` nonzero values, for ``0 <= d <= q - 1``.
    """
    if not 0 <= d <= F.q - 1:
        raise UsageError(f"low moment degree must be in [0, {F.q - 1}], got {d}")
    started = time.perf_counter()
    C = moment_code(F, d)
    weight, witness, mode = _min_support(C, budget, samples, seed, reporter or NullProgressReporter())
    sampled = mode == "sampled"
    return _make(
        "moment-support",
        {"q": F.q, "d": d},
        ">=",
        Fraction(d + 1),
        _finite(weight),
        started,
        witness=witness,
        mode=mode,
        samples=samples if sampled else None,
        seed=seed if sampled else None,
        notes=[f"solution space dimension {C.k}"],
    )


def high_moment_basis(F: FieldSpec, d: int) -> list[tuple[int, int]]:
    """``(e, l)`` with ``e + l <= 2(q - 1) - d``: exponents of the monomials
    that span the high moment code.
    """
    top = 2 * (F.q - 1) - d
    return [(e, l) for e in range(F.q) for l in range(F.q) if e + l <= top]


def check_high_moment_support(
    F: FieldSpec,
    d: int,
    *,
    budget: int = 1 << 24,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    reporter: ProgressReporter | None = None,
) -> LemmaReport:
    """For ``q - 1 <= d <= 2(q - 1)`` the support bound is ``q (d + 2 - q)``.

    The solution space must also be exactly the span of the monomials of
    :func:`high_moment_basis`, so its dimension is their count.
    """
    q = F.q
    if not q - 1 <= d <= 2 * (q - 1):
        raise UsageError(f"high moment degree must be in [{q - 1}, {2 * (q - 1)}], got {d}")
    started = time.perf_counter()
    C = moment_code(F, d)
    basis = high_moment_basis(F, d)
    spanned = LinearCode.from_spanning(
        FMatrix(F, monomial_matrix(F, messages(F, 2), basis)), name=f"monomials{d}"
    )
    structure = spanned == C and C.k == len(basis)
    weight, witness, mode = _min_support(C, budget, samples, seed, reporter or NullProgressReporter())
    sampled = mode == "sampled"
    return _make(
        "moment-support-high",
        {"q": q, "d": d},
        ">=",
        Fraction(q * (d + 2 - q)),
        _finite(weight),
        started,
        witness=witness,
        mode=mode,
        samples=samples if sampled else None,
        seed=seed if sampled else None,
        extra=structure,
        notes=[
            f"solution space dimension {C.k}, {len(basis)} spanning monomials",
            "monomial span matches" if structure else "monomial span DIFFERS",
        ],
    )


# =============================================================================
# Code facts
# =============================================================================


def _distance(C: LinearCode, budget: int, reporter: ProgressReporter | None) -> int | float:
    return min_distance_exact(C, budget, reporter=reporter).distance


def check_zero_diagonal_weight(
    C: LinearCode, *, budget: int = DEFAULT_BUDGET, reporter: ProgressReporter | None = None
) -> LemmaReport:
    """Nonzero symmetric zero-diagonal members of ``C (x) C`` weigh at least
    ``ceil(d^2 (1 + 1/q))``.
    """
    started = time.perf_counter()
    q = C.field.q
    d = _distance(C, budget, reporter)
    sub = symmetric_zero_diag_subcode(C)
    claimed = None if d == math.inf else Fraction(math.ceil(Fraction(int(d) ** 2) * (1 + Fraction(1, q))))
    witness = None
    measured: int | float = math.inf
    if sub.k:
        report = min_distance_exact(sub, budget, reporter=reporter)
        measured = report.distance
        witness = None if report.witness is None else report.witness.entries
    return _make(
        "zero-diagonal",
        {"code": C.name, "q": q},
        ">=",
        claimed,
        _finite(measured),
        started,
        witness=witness,
        notes=[f"d({C.name}) = {d}", f"subcode dimension {sub.k}"],
    )


def check_pair_support(C: LinearCode, *, budget: int = 1 << 26) -> LemmaReport:
    """Two independent codewords together cover at least ``ceil(d (1 + 1/q))``
    coordinates.
    """
    started = time.perf_counter()
    q = C.field.q
    d = _distance(C, budget, None)
    union, pair = fact4_min_union(C, budget)
    if pair is None:
        return _make("pair-support", {"code": C.name, "q": q}, ">=", None, None, started,
                     notes=["fewer than two independent codewords"])
    claimed = Fraction(math.ceil(Fraction(int(d)) * (1 + Fraction(1, q))))
    return _make(
        "pair-support",
        {"code": C.name, "q": q},
        ">=",
        claimed,
        Fraction(union),
        started,
        witness=np.concatenate([pair[0].entries, pair[1].entries]),
        notes=[f"d({C.name}) = {d}"],
    )


def check_tensor_distance(
    C1: LinearCode, C2: LinearCode, *, budget: int = DEFAULT_BUDGET
) -> LemmaReport:
    """``d(C1 (x) C2) = d(C1) d(C2)``, exactly."""
    started = time.perf_counter()
    d1 = _distance(C1, budget, None)
    d2 = _distance(C2, budget, None)
    T = tensor(C1, C2)
    report = min_distance_exact(T, budget)
    claimed = None if math.inf in (d1, d2) else Fraction(int(d1) * int(d2))
    return _make(
        "tensor-distance",
        {"code1": C1.name, "code2": C2.name, "q": C1.field.q},
        "==",
        claimed,
        _finite(report.distance),
        started,
        witness=None if report.witness is None else report.witness.entries,
        notes=[f"d1 = {d1}", f"d2 = {d2}"],
    )


def check_symmetric_dimension(C: LinearCode) -> LemmaReport:
    """Symmetric members of ``C (x) C`` form a space of dimension at least ``k^2 / 2``."""
    started = time.perf_counter()
    sub = symmetric_subcode(C)
    return _make(
        "symmetric-dimension",
        {"code": C.name, "q": C.field.q},
        ">=",
        Fraction(math.ceil(Fraction(C.k**2, 2))),
        Fraction(sub.k),
        started,
    )


# =============================================================================
# Polynomials and evaluation sets
# =============================================================================


def check_zero_fraction(
    F: FieldSpec,
    n: int,
    d: int,
    *,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    reporter: ProgressReporter | None = None,
) -> LemmaReport:
    """A nonzero polynomial of total degree ``<= d`` vanishes on at most a
    ``d / q`` fraction of F_q^n.

    Exhaustive over every coefficient vector when there are at most
    ``2^24`` of them; otherwise ``samples`` random nonzero polynomials.
    """
    if not 0 <= d <= F.q - 1:
        raise UsageError(f"degree must be in [0, {F.q - 1}], got {d}")
    started = time.perf_counter()
    U = exhaustive_set(F, n)
    monos = monomials(F, n, d)
    params: dict[str, Param] = {"q": F.q, "n": n, "d": d}
    claimed = Fraction(d, F.q)
    if F.q ** len(monos) <= MAX_POLYNOMIALS:
        report = verify_nonzero_fraction(U, d, reporter=reporter)
        return _make("zero-fraction", params, "<=", claimed, 1 - report.minimum, started,
                     witness=np.array(report.witness))

    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, F.q, size=(samples, len(monos)), dtype=np.uint8)
    coeffs = coeffs[np.any(coeffs != 0, axis=1)]
    values = _matmul_array(F, coeffs, monomial_matrix(F, U.points, monos))
    zeros = len(U) - np.count_nonzero(values, axis=1)
    worst = int(np.argmax(zeros))
    return _make(
        "zero-fraction",
        params,
        "<=",
        claimed,
        Fraction(int(zeros[worst]), len(U)),
        started,
        witness=coeffs[worst],
        mode="sampled",
        samples=samples,
        seed=seed,
    )


def check_nonzero_fraction(
    R: EvaluationSet, e: int, *, reporter: ProgressReporter | None = None
) -> LemmaReport:
    """On ``R``, nonzero polynomials of degree ``<= e`` are nonzero on at least
    ``1 - e/q - eps`` of the points, ``eps`` being ``R``'s measured fooling
    error at degree ``e``.
    """
    started = time.perf_counter()
    F = R.field
    eps = verify_fooling(R, e, reporter=reporter).epsilon_measured
    report = verify_nonzero_fraction(R, e, reporter=reporter)
    return _make(
        "nonzero-fraction",
        {"q": F.q, "n": R.n, "e": e, "set": R.provenance},
        ">=",
        1 - Fraction(e, F.q) - eps,
        report.minimum,
        started,
        witness=np.array(report.witness),
        notes=[f"measured fooling error {eps}", f"{len(R)} points"],
    )


def check_fooling(
    R: EvaluationSet,
    d: int,
    claimed: Fraction | None,
    *,
    samples: int | None = None,
    seed: int | None = None,
    reporter: ProgressReporter | None = None,
) -> LemmaReport:
    """``R`` fools polynomials of degree ``<= d`` to within ``claimed``."""
    started = time.perf_counter()
    report = verify_fooling(R, d, samples=samples, seed=seed, reporter=reporter)
    return _make(
        "fooling",
        {"q": R.field.q, "n": R.n, "d": d, "set": R.provenance},
        "<=",
        claimed,
        report.epsilon_measured,
        started,
        witness=None if report.witness is None else np.array(report.witness),
        mode=report.mode,
        samples=samples,
        seed=seed,
        notes=[f"{len(R)} points, {report.polynomials_tested} polynomials"],
    )


def check_sum_fooling(
    base: EvaluationSet, d: int, *, reporter: ProgressReporter | None = None
) -> LemmaReport:
    """The sum of ``d`` copies of ``base`` fools degree ``d`` at least as well
    as ``base`` fools linear forms.

    The sum must also be no worse than ``base`` on linear forms.
    """
    started = time.perf_counter()
    summed = viola_sum(base, d)
    base_eps = verify_fooling(base, 1, reporter=reporter).epsilon_measured
    sum_eps = verify_fooling(summed, 1, reporter=reporter).epsilon_measured
    high = verify_fooling(summed, d, reporter=reporter).epsilon_measured if d > 1 else sum_eps
    return _make(
        "sum-fooling",
        {"q": base.field.q, "n": base.n, "d": d, "set": base.provenance},
        "<=",
        base_eps,
        high,
        started,
        extra=sum_eps <= base_eps,
        notes=[
            f"|base| = {len(base)}, |sum| = {len(summed)}",
            f"degree-1 error of the sum {sum_eps}",
        ],
    )


