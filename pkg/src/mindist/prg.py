# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Evaluation sets R in F_q^n and the verifiers that measure how well they
fool low-degree polynomials.

An :class:`EvaluationSet` is an ordered multiset of points; its order
defines the coordinates of every polynomial code built on it, and
probabilities weight points by multiplicity.

Three constructions are provided:

* :func:`exhaustive_set`: all of F_q^n, which fools every degree exactly.
* :func:`small_bias_set`: the powering construction over an extension
  field, aimed at linear forms.
* :func:`viola_sum`: the ``d``-fold sumset of a base set, aimed at
  degree ``d``.

None of the fooling guarantees are assumed.  :func:`verify_fooling` and
:func:`verify_nonzero_fraction` measure them exactly with integer
arithmetic.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np
import numpy.typing as npt

from .errors import SizeOverflow, TooLarge, UsageError
from .gf import FieldSpec
from .linalg import Array, _matmul_array, messages
from .progress import NullProgressReporter, ProgressReporter

logger = logging.getLogger(__name__)

MAX_UNIFORM_POINTS = 1 << 20
MAX_SUM_POINTS = 1 << 24
MAX_POLYNOMIALS = 1 << 24
# |R| = Q^2 for the powering construction.
MAX_SMALL_BIAS_POINTS = 1 << 20

# Values scored per vectorised batch (polynomials x points).
_BATCH_CELLS = 1 << 22

Monomial = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """Ordered multiset of points in F_q^n.

    ``points`` is a read-only ``N x n`` array of element indices.
    """

    field: FieldSpec
    n: int
    points: Array = field(repr=False)
    provenance: str = "explicit-file"

    def __post_init__(self) -> None:
        pts = np.array(self.points, dtype=np.int64).reshape(-1, self.n)
        if pts.shape[0] < 1:
            raise UsageError("an evaluation set needs at least one point")
        if pts.size and (pts.min() < 0 or pts.max() >= self.field.q):
            raise UsageError(f"point entries outside [0, {self.field.q})")
        arr = pts.astype(np.uint8)
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EvaluationSet)
            and other.field == self.field
            and other.n == self.n
            and np.array_equal(other.points, self.points)
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.n, self.points.tobytes()))


# =============================================================================
# Monomials and evaluation
# =============================================================================


def monomials(F: FieldSpec, n: int, d: int, *, min_degree: int = 0) -> list[Monomial]:
    """Exponent vectors with each exponent ``<= q-1`` and total degree in
    ``[min_degree, d]``.

    Ordered by total degree, then with ``x_1`` exponents first, so degree 1
    lists ``x_1, ..., x_n`` in order.
    """
    out: list[Monomial] = []
    for total in range(min_degree, d + 1):
        layer = [
            e
            for e in itertools.product(range(F.q), repeat=n)
            if sum(e) == total
        ]
        layer.sort(reverse=True)
        out.extend(layer)
    return out


def monomial_matrix(F: FieldSpec, points: Array, monos: Sequence[Monomial]) -> Array:
    """Row ``i`` is monomial ``i`` evaluated at every point (``0^0 = 1``)."""
    N = points.shape[0]
    E = np.ones((len(monos), N), dtype=np.uint8)
    for r, mono in enumerate(monos):
        for var, e in enumerate(mono):
            if e:
                E[r] = F.mul_table[E[r], F.pow_table[points[:, var], e]]
    return E


def polynomial_values(
    R: EvaluationSet, coeffs: npt.ArrayLike, monos: Sequence[Monomial]
) -> Array:
    """Values of ``sum_i coeffs[i] * monos[i]`` at every point of ``R``.

    ``coeffs`` may be a single coefficient vector or a batch of them.
    """
    F = R.field
    c = np.atleast_2d(np.asarray(coeffs, dtype=np.uint8))
    vals = _matmul_array(F, c, monomial_matrix(F, R.points, monos))
    return vals[0] if np.ndim(coeffs) == 1 else vals


# =============================================================================
# Constructions
# =============================================================================


def exhaustive_set(F: FieldSpec, n: int) -> EvaluationSet:
    """All ``q^n`` points in lexicographic order.

    Raises:
        TooLarge: If ``q^n > 2^20``.
    """
    size = F.q**n
    if size > MAX_UNIFORM_POINTS:
        raise TooLarge(
            f"F_{F.q}^{n} has {size} points, limit {MAX_UNIFORM_POINTS}",
            needed=size,
            budget=MAX_UNIFORM_POINTS,
        )
    return EvaluationSet(F, n, messages(F, n), "exhaustive")


class ExtensionField:
    """F_{q^t} as length-``t`` coefficient vectors over F_q, with log tables.

    The modulus is the first monic irreducible of degree ``t`` in
    lexicographic order of its lower coefficients.  Element indices are
    base-``q`` digit vectors, lowest degree first, like :mod:`mindist.gf`.
    """

    def __init__(self, F: FieldSpec, t: int) -> None:
        if t < 1:
            raise UsageError(f"extension degree must be positive, got {t}")
        self.base = F
        self.t = t
        self.order = F.q**t
        self.modulus = self._find_irreducible()
        self._exp, self._log = self._build_log_tables()

    def _digits(self, x: int) -> list[int]:
        q = self.base.q
        return [(x // q**i) % q for i in range(self.t)]

    def _index(self, digits: Sequence[int]) -> int:
        q = self.base.q
        return sum(int(c) * q**i for i, c in enumerate(digits))

    def _poly_mulmod(self, a: Sequence[int], b: Sequence[int], mod: Sequence[int]) -> list[int]:
        F = self.base
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self._poly_rem(out, mod)

    def _poly_rem(self, a: list[int], mod: Sequence[int]) -> list[int]:
        F = self.base
        a = list(a)
        deg = len(mod) - 1
        for i in range(len(a) - 1, deg - 1, -1):
            c = a[i]
            if c:
                for j in range(deg + 1):
                    a[i - deg + j] = F.sub(a[i - deg + j], F.mul(c, mod[j]))
        return (a + [0] * deg)[:deg]

    def _find_irreducible(self) -> tuple[int, ...]:
        q, t = self.base.q, self.t
        if t == 1:
            return (0, 1)
        for low in itertools.product(range(q), repeat=t):
            cand = [*low[::-1], 1]
            if cand[0] == 0:
                continue
            if not any(
                not any(self._poly_rem(cand, [*div, 1]))
                for deg in range(1, t // 2 + 1)
                for div in itertools.product(range(q), repeat=deg)
            ):
                return tuple(cand)
        raise AssertionError(f"no irreducible of degree {t} over F_{q}")  # pragma: no cover

    def _build_log_tables(self) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
        Q = self.order
        for g in range(2 if Q > 2 else 1, Q):
            exp = np.zeros(Q - 1, dtype=np.int64)
            x = [1] + [0] * (self.t - 1)
            gd = self._digits(g)
            seen: set[int] = set()
            for i in range(Q - 1):
                idx = self._index(x)
                if idx in seen:
                    break
                seen.add(idx)
                exp[i] = idx
                x = self._poly_mulmod(x, gd, self.modulus)
            if len(seen) == Q - 1:
                log = np.full(Q, -1, dtype=np.int64)
                log[exp] = np.arange(Q - 1)
                return exp, log
        raise AssertionError(f"F_{Q} has no generator")  # pragma: no cover

    def mul(self, a: npt.ArrayLike, b: npt.ArrayLike) -> npt.NDArray[np.int64]:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def pow(self, a: npt.ArrayLike, e: int) -> npt.NDArray[np.int64]:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        res = self._exp[(self._log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, res)

    def trace_digit(self, a: npt.ArrayLike) -> npt.NDArray[np.int64]:
        """The fixed F_q-linear surjection: the constant coefficient."""
        return np.asarray(a, dtype=np.int64) % self.base.q


def small_bias_degree(F: FieldSpec, n: int, eps: float) -> int:
    """Smallest ``t`` with ``q^t >= 2n/eps``, capped so that ``q^(2t) <= 2^20``."""
    if eps <= 0:
        raise UsageError(f"epsilon must be positive, got {eps}")
    t = 1
    while F.q**t < 2 * n / eps:
        t += 1
    cap = 1
    while F.q ** (2 * (cap + 1)) <= MAX_SMALL_BIAS_POINTS:
        cap += 1
    if t > cap:
        logger.warning(
            "Small-bias set for n=%d, eps=%g needs t=%d; capping at t=%d", n, eps, t, cap
        )
        t = cap
    return t


def small_bias_set(F: FieldSpec, n: int, eps: float) -> EvaluationSet:
    """Points ``(pi(a*b), pi(a^2*b), ..., pi(a^n*b))`` over all pairs
    ``(a, b)`` of F_{q^t}, in lexicographic order of ``(a, b)``.

    A linear form with coefficients ``c`` evaluates to ``pi(b * p_c(a))``
    with ``p_c(z) = sum c_i z^i``, which is uniform over F_q unless ``a``
    is one of the at most ``n`` roots of ``p_c``.  Choosing ``q^t >= 2n/eps``
    bounds the total-variation sum by ``eps``.
    """
    t = small_bias_degree(F, n, eps)
    E = ExtensionField(F, t)
    Q = E.order
    alphas = np.repeat(np.arange(Q), Q)
    betas = np.tile(np.arange(Q), Q)
    pts = np.empty((Q * Q, n), dtype=np.uint8)
    for i in range(1, n + 1):
        pts[:, i - 1] = E.trace_digit(E.mul(E.pow(alphas, i), betas))
    logger.info("Small-bias set over F_%d^%d: t=%d, %d points", F.q, n, t, Q * Q)
    return EvaluationSet(F, n, pts, f"small-bias(eps={eps:g}, t={t})")


def viola_sum(base: EvaluationSet, d: int) -> EvaluationSet:
    """The ``d``-fold sumset of ``base`` in lexicographic order of index tuples.

    Raises:
        SizeOverflow: If ``|base|^d > 2^24``.
    """
    if d < 1:
        raise UsageError(f"degree must be at least 1, got {d}")
    size = len(base) ** d
    if size > MAX_SUM_POINTS:
        raise SizeOverflow(
            f"sum of {d} copies has {size} points, limit {MAX_SUM_POINTS}",
            needed=size,
            budget=MAX_SUM_POINTS,
        )
    F = base.field
    acc = base.points
    for _ in range(d - 1):
        acc = F.add_table[acc[:, None, :], base.points[None, :, :]].reshape(-1, base.n)
    return EvaluationSet(F, base.n, acc, f"viola(d={d}, base={base.provenance})")


# =============================================================================
# Verifiers
# =============================================================================


@dataclass(frozen=True)
class FoolingReport:
    """Measured fooling error of ``R`` against degree-``d`` polynomials.

    ``epsilon_measured`` is the largest total-variation sum
    ``sum_a |Pr_R[f = a] - Pr_U[f = a]|`` over the polynomials tested.
    """

    d: int
    epsilon_measured: Fraction
    mode: Literal["exhaustive", "sampled"]
    polynomials_tested: int
    samples: int | None = None
    seed: int | None = None
    set_size: int = 0
    witness: tuple[int, ...] | None = None


def _value_counts(F: FieldSpec, values: Array) -> npt.NDArray[np.int64]:
    """Per-row histogram of field values, shape ``(rows, q)``."""
    return np.stack([(values == a).sum(axis=1) for a in range(F.q)], axis=1).astype(np.int64)


def _coefficient_batches(
    F: FieldSpec,
    count_monomials: int,
    points: int,
    *,
    sampled: int | None,
    seed: int | None,
) -> tuple[int, list[Array]]:
    total = F.q**count_monomials
    batch = max(1, _BATCH_CELLS // max(points, 1))
    if sampled is None:
        if total > MAX_POLYNOMIALS:
            raise TooLarge(
                f"{total} polynomials exceed the exhaustive limit {MAX_POLYNOMIALS}",
                needed=total,
                budget=MAX_POLYNOMIALS,
            )
        allc = messages(F, count_monomials)
        return total, [allc[s : s + batch] for s in range(0, total, batch)]
    rng = np.random.default_rng(seed)
    allc = rng.integers(0, F.q, size=(sampled, count_monomials), dtype=np.uint8)
    return sampled, [allc[s : s + batch] for s in range(0, sampled, batch)]


def verify_fooling(
    R: EvaluationSet,
    d: int,
    *,
    samples: int | None = None,
    seed: int | None = None,
    reporter: ProgressReporter | None = None,
) -> FoolingReport:
    """Measure the fooling error of ``R`` against polynomials of degree ``<= d``.

    Exhaustive over all coefficient vectors unless ``samples`` is given,
    in which case ``samples`` random polynomials are drawn from ``seed``.
    The uniform side is always computed over all of F_q^n.

    Raises:
        TooLarge: If F_q^n or the exhaustive polynomial space is too large.
    """
    F = R.field
    reporter = reporter or NullProgressReporter()
    monos = monomials(F, R.n, d)
    U = exhaustive_set(F, R.n)
    ER = monomial_matrix(F, R.points, monos)
    EU = monomial_matrix(F, U.points, monos)
    nR, nU = len(R), len(U)
    total, batches = _coefficient_batches(
        F, len(monos), max(nR, nU), sampled=samples, seed=seed
    )

    best_num = -1
    witness: tuple[int, ...] | None = None
    with reporter.track(f"Testing {total} polynomials of degree <= {d}", total=total) as bar:
        for coeffs in batches:
            cR = _value_counts(F, _matmul_array(F, coeffs, ER))
            cU = _value_counts(F, _matmul_array(F, coeffs, EU))
            # sum_a |cR/nR - cU/nU| scaled by nR * nU
            num = np.abs(cR * nU - cU * nR).sum(axis=1)
            i = int(np.argmax(num))
            if int(num[i]) > best_num:
                best_num = int(num[i])
                witness = tuple(int(x) for x in coeffs[i])
            bar.advance(coeffs.shape[0])

    eps = Fraction(best_num, nR * nU)
    logger.info("Fooling error of %s at degree %d: %s", R.provenance, d, eps)
    return FoolingReport(
        d=d,
        epsilon_measured=eps,
        mode="exhaustive" if samples is None else "sampled",
        polynomials_tested=total,
        samples=samples,
        seed=seed,
        set_size=nR,
        witness=witness,
    )


@dataclass(frozen=True)
class NonzeroFractionReport:
    """Minimum of ``Pr_R[f != 0]`` over nonzero polynomials of degree ``<= e``."""

    e: int
    minimum: Fraction
    witness: tuple[int, ...]
    monomials: tuple[Monomial, ...]
    polynomials_tested: int


def verify_nonzero_fraction(
    R: EvaluationSet,
    e: int,
    *,
    reporter: ProgressReporter | None = None,
) -> NonzeroFractionReport:
    """Exact minimum nonzero fraction over ``R`` of nonzero degree-``<= e``
    polynomials, with the first coefficient vector attaining it.

    A polynomial counts as nonzero when its reduced coefficient vector is,
    so on a set that does not separate monomials the minimum can be 0.

    Raises:
        TooLarge: If the polynomial space exceeds the exhaustive limit.
    """
    F = R.field
    reporter = reporter or NullProgressReporter()
    monos = monomials(F, R.n, e)
    ER = monomial_matrix(F, R.points, monos)
    nR = len(R)
    total, batches = _coefficient_batches(F, len(monos), nR, sampled=None, seed=None)

    best = nR + 1
    witness: tuple[int, ...] = ()
    first = True
    with reporter.track(f"Scanning {total} polynomials of degree <= {e}", total=total) as bar:
        for coeffs in batches:
            nonzero = np.count_nonzero(_matmul_array(F, coeffs, ER), axis=1)
            if first:
                nonzero[0] = nR + 1  # zero polynomial
                first = False
            i = int(np.argmin(nonzero))
            if int(nonzero[i]) < best:
                best = int(nonzero[i])
                witness = tuple(int(x) for x in coeffs[i])
            bar.advance(coeffs.shape[0])

    return NonzeroFractionReport(
        e=e,
        minimum=Fraction(best, nR),
        witness=witness,
        monomials=tuple(monos),
        polynomials_tested=total - 1,
    )


def schwartz_zippel_bound(F: FieldSpec, e: int, eps: Fraction | float = 0) -> Fraction:
    """``1 - e/q - eps``, the guaranteed nonzero fraction on an eps-fooling set."""
    return Fraction(1) - Fraction(e, F.q) - Fraction(eps)

