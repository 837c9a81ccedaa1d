# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for running checks by name, experiments and YAML plans."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from mindist.codes import hamming_code
from mindist.errors import InvariantFailure, ParseError, RedirectError, UsageError
from mindist.formats import write_gfcode
from mindist.gf import SUPPORTED_ORDERS, field_make
from mindist.prg import EvaluationSet
from mindist.run_options import parse_run_options
from mindist.verify import (
    build_artifact,
    enforce,
    experiment_completeness,
    experiment_goodcode,
    experiment_soundness,
    failures,
    resolve_code,
    run_check,
    run_checks,
    run_experiment,
    run_plan,
)
from mindist.verify.checks import check_fooling

from conftest import FIXTURES, instance


class TestResolveCode:
    @pytest.mark.parametrize(
        ("spec", "shape"),
        [
            ("simplex:3", (7, 3)),
            ("hamming:3", (7, 4)),
            ("rep:3:5", (5, 1)),
            ("identity:4:3", (3, 3)),
            ("random:3:8:3:1", (8, 3)),
        ],
    )
    def test_named_codes(self, spec: str, shape: tuple[int, int]):
        C = resolve_code(spec)
        assert (C.n, C.k) == shape

    def test_file(self, tmp_path: Path):
        path = write_gfcode(tmp_path / "h.gf", hamming_code(3))
        assert resolve_code(str(path)) == hamming_code(3)

    @pytest.mark.parametrize("spec", ["simplex", "simplex:x", "golay:23", "rep:3"])
    def test_unknown(self, spec: str):
        with pytest.raises(UsageError, match="Unknown code"):
            resolve_code(spec)


class TestRunCheck:
    def test_power_sums_over_every_order(self):
        reports = run_check("power-sums", {})
        assert len(reports) == len(SUPPORTED_ORDERS)

    def test_omitted_degree_runs_every_legal_value(self):
        assert len(run_check("moment-support", {"q": 3})) == 3
        assert len(run_check("moment-support-high", {"q": 3})) == 3
        assert len(run_check("zero-fraction", {"q": 3, "n": 2})) == 3

    def test_explicit_degree(self):
        (report,) = run_check("moment-support", {"q": 3, "d": 2})
        assert report.params == {"q": 3, "d": 2}

    def test_code_checks(self):
        (report,) = run_check("tensor-distance", {"code": "hamming:3", "code2": "hamming:3"})
        assert report.measured == 9

    def test_fooling_claim_for_small_bias(self):
        (report,) = run_check(
            "fooling", {"q": 2, "n": 4, "d": 1, "points": "small-bias", "bias": 0.5}
        )
        assert report.claimed == Fraction(1, 2)
        assert report.mode == "exhaustive"
        assert report.passed

    def test_missing_parameter(self):
        with pytest.raises(UsageError, match="missing parameter"):
            run_check("pair-support", {})

    def test_unknown_check(self):
        with pytest.raises(UsageError, match="Unknown check"):
            run_check("lemma-9", {})

    def test_run_checks_sorts_and_threads(self):
        tasks = [
            lambda: run_check("power-sums", {"q": 5}),
            lambda: run_check("power-sums", {"q": 3}),
        ]
        one = run_checks(tasks)
        many = run_checks(tasks, threads=2)
        assert [r.id for r in one] == ["power-sums[q=3]", "power-sums[q=5]"]
        assert [r.id for r in many] == [r.id for r in one]


class TestEnforce:
    def test_failures_are_collected(self):
        F3 = field_make(3)
        bad = check_fooling(EvaluationSet(F3, 1, np.array([[0], [0]])), 1, Fraction(0))
        good = run_check("power-sums", {"q": 3})
        assert failures([*good, bad]) == [bad]
        with pytest.raises(InvariantFailure, match="fooling"):
            enforce([*good, bad])

    def test_passing_reports(self):
        enforce(run_check("power-sums", {"q": 2}))


# =============================================================================
# Experiments
# =============================================================================


class TestExperiments:
    def test_ncp2_soundness(self):
        opts = parse_run_options({"target": "ncp2"})
        report = experiment_soundness(instance("half"), opts, label="half")
        assert report.passed
        assert report.id == "soundness:half:ncp2:q=2"
        assert report.measured_distance == 4
        assert report.checks["exact-weight"]

    def test_ncp2_completeness(self):
        opts = parse_run_options({"target": "ncp2"})
        report = experiment_completeness(instance("planted3"), opts)
        assert report.passed
        assert report.intended_weight == 3
        assert report.opt == 1

    def test_md2_completeness(self):
        opts = parse_run_options({"target": "md2", "r": 1})
        report = experiment_completeness(instance("planted3"), opts)
        assert report.passed
        assert report.intended_weight == 49 + 3
        assert report.measured_distance is not None

    def test_completeness_needs_satisfiable_instance(self):
        opts = parse_run_options({"target": "ncp2"})
        with pytest.raises(UsageError, match="not satisfiable"):
            experiment_completeness(instance("half"), opts)

    def test_goodcode_rejects_ncp2(self):
        opts = parse_run_options({"target": "ncp2"})
        with pytest.raises(UsageError):
            experiment_goodcode(build_artifact(instance("half"), opts), opts)

    def test_md2_goodcode(self):
        opts = parse_run_options({"target": "md2", "r": 1})
        report = run_experiment("goodcode", instance("planted3"), opts, label="p3")
        assert report.checks["dimension"]
        assert report.dimension_bound == max(0, 3 * 4 // 2 - 7)

    def test_binary_field_redirected(self):
        opts = parse_run_options({"target": "mdq", "q": 2})
        with pytest.raises(RedirectError):
            build_artifact(instance("planted2"), opts)

    def test_unknown_experiment(self):
        with pytest.raises(UsageError):
            run_experiment("speed", instance("half"), parse_run_options({}))


# =============================================================================
# Plans
# =============================================================================


def write_plan(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "plan.yaml"
    path.write_text(text)
    return path


class TestRunPlan:
    def test_checks_and_experiments(self, tmp_path: Path):
        plan = write_plan(
            tmp_path,
            f"""
checks:
  - check: power-sums
    q: 3
  - check: pair-support
    code: simplex:3
experiments:
  - experiment: soundness
    instance: {FIXTURES / "half.mn"}
    options:
      target: ncp2
""",
        )
        suite = run_plan(plan)
        assert suite.passed
        assert [r.check for r in suite.checks] == ["pair-support", "power-sums"]
        assert suite.experiments[0].id == "soundness:half:ncp2:q=2"

    def test_relative_instance_paths(self, tmp_path: Path):
        (tmp_path / "c.mn").write_text("maxnand 1 1 1\n1 1 1\n")
        plan = write_plan(
            tmp_path,
            "experiments:\n  - experiment: soundness\n    instance: c.mn\n"
            "    options: {target: ncp2}\n",
        )
        assert run_plan(plan).experiments[0].measured_distance == 3

    def test_empty_plan(self, tmp_path: Path):
        suite = run_plan(write_plan(tmp_path, ""))
        assert suite.passed
        assert suite.checks == []

    @pytest.mark.parametrize(
        ("text", "error"),
        [
            ("colour: red\n", ParseError),
            ("- just a list\n", ParseError),
            ("checks: [\n", ParseError),
            ("checks:\n  - check: lemma-9\n", UsageError),
            ("experiments:\n  - experiment: soundness\n", UsageError),
        ],
    )
    def test_invalid_plans(self, tmp_path: Path, text: str, error: type[Exception]):
        with pytest.raises(error):
            run_plan(write_plan(tmp_path, text))

    def test_options_are_validated(self, tmp_path: Path):
        plan = write_plan(
            tmp_path,
            f"experiments:\n  - experiment: soundness\n    instance: {FIXTURES / 'half.mn'}\n"
            "    options: {colour: red}\n",
        )
        with pytest.raises(UsageError, match="colour"):
            run_plan(plan)

    def test_missing_plan(self, tmp_path: Path):
        with pytest.raises(UsageError):
            run_plan(tmp_path / "absent.yaml")
