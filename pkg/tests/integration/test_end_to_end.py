# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""End-to-end reductions: build, enumerate, compare with the bounds."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from typer.testing import CliRunner

from mindist.cli import app
from mindist.csp import contradiction, gen_noisy, gen_planted, opt_exact, pad_variables
from mindist.formats import write_maxnand
from mindist.verify import (
    build_artifact,
    experiment_completeness,
    experiment_goodcode,
    experiment_soundness,
    run_plan,
)

from conftest import SUITE_PLAN, instance, options

pytestmark = pytest.mark.slow

# The F_q codes are searched exactly only when this small.
MDQ_BUDGET = 1 << 20


# =============================================================================
# Nearest codeword over F_2
# =============================================================================


class TestNcp2:
    @pytest.mark.parametrize("seed", range(6))
    def test_minimum_weight_is_exact_on_noisy_instances(self, seed: int):
        psi = gen_noisy(6, 12, 0.4, seed=seed)
        report = experiment_soundness(psi, options(target="ncp2"), label=f"noisy{seed}")
        assert report.passed, report.checks
        assert report.checks["exact-weight"]

    @pytest.mark.parametrize("seed", range(4))
    def test_planted_completeness(self, seed: int):
        psi, _ = gen_planted(6, 10, seed)
        report = experiment_completeness(psi, options(target="ncp2"))
        assert report.passed
        assert report.measured_distance == psi.m


# =============================================================================
# Minimum distance over F_2
# =============================================================================


class TestMindist2:
    def test_soundness_on_padded_contradiction(self):
        report = experiment_soundness(instance("contradiction3"), options(target="md2"))
        assert report.passed, report.checks
        assert report.opt == Fraction(2, 3)

    def test_planted_completeness(self):
        report = experiment_completeness(instance("planted3"), options(target="md2"))
        assert report.passed
        assert report.intended_weight == report.bounds.completeness


# =============================================================================
# Minimum distance over F_q
# =============================================================================


class TestMindistq:
    def test_completeness(self):
        opts = options(target="mdq", q=3, budget=MDQ_BUDGET)
        report = experiment_completeness(instance("planted2"), opts)
        assert report.passed
        assert report.intended_weight == 81 + report.r * 2

    def test_goodcode(self):
        opts = options(target="mdq", q=3, budget=MDQ_BUDGET)
        artifact = build_artifact(instance("planted2"), opts)
        report = experiment_goodcode(artifact, opts)
        assert report.checks["dimension"]
        assert report.rate is not None

    def test_soundness_on_padded_contradiction(self):
        psi = pad_variables(contradiction(), 2)
        assert psi == instance("contradiction2")
        report = experiment_soundness(psi, options(target="mdq", q=3))
        assert report.passed, report.checks
        assert report.opt == Fraction(1, 2)
        assert report.distance_method == "case-split"
        assert report.checks == {"case1-structure": True, "certificate": True}
        assert report.bounds.floor == 108
        assert report.certificate


# =============================================================================
# Plans and the command line
# =============================================================================


class TestSuite:
    def test_desk_scale_plan_passes(self):
        suite = run_plan(SUITE_PLAN)
        assert suite.passed, [r.id for r in suite.checks if not r.passed]
        assert len(suite.experiments) == 6


class TestCommandLine:
    def test_generate_reduce_measure(self, tmp_path: Path):
        runner = CliRunner()
        psi_path = tmp_path / "psi.mn"
        psi, _ = gen_planted(3, 4, 2)
        write_maxnand(psi_path, psi)
        assert opt_exact(psi)[0] == 1

        out = tmp_path / "art"
        reduced = runner.invoke(
            app, ["reduce", "-i", str(psi_path), "-o", str(out), "--target", "md2", "--r", "1"]
        )
        assert reduced.exit_code == 0

        report = tmp_path / "d.json"
        measured = runner.invoke(app, ["distance", "-i", str(out), "--report", str(report)])
        assert measured.exit_code == 0

        manifest = json.loads((out / "manifest.json").read_text())
        distance = json.loads(report.read_text())["distance"]
        bounds = manifest["bounds"]
        assert Fraction(bounds["floor"]) <= distance <= bounds["completeness"]
