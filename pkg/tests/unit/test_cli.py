# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for the command-line interface and its exit codes."""

from __future__ import annotations

import json
import math
import sys
from dataclasses import replace
from pathlib import Path

import pytest
from typer.testing import CliRunner

from mindist import __version__
from mindist.cli import _witness_holds, app, cli
from mindist.codes import AffineSubspace, hamming_code, identity_code, repetition_code
from mindist.csp import contradiction, pad_variables
from mindist.distance import DistanceReport, min_distance_exact, ncp_min_weight
from mindist.formats import format_maxnand, parse_maxnand, write_gfcode
from mindist.gf import FieldSpec, field_make
from mindist.linalg import FVector

from conftest import FIXTURES

runner = CliRunner()


def read_report(path: Path) -> dict:
    return json.loads(path.read_text())


class TestGen:
    def test_contradiction(self):
        result = runner.invoke(app, ["gen", "contradiction"])
        assert result.exit_code == 0
        assert result.stdout == "maxnand 1 1 1\n1 1 1\n"

    def test_padded_contradiction(self, tmp_path: Path):
        out = tmp_path / "c.mn"
        result = runner.invoke(app, ["gen", "contradiction", "--pad", "3", "-o", str(out)])
        assert result.exit_code == 0
        assert out.read_text() == format_maxnand(pad_variables(contradiction(), 3))

    def test_planted_is_reproducible(self):
        args = ["gen", "planted", "--n", "5", "--m", "9", "--seed", "4"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert parse_maxnand(first.stdout).m == 9

    def test_noisy(self):
        result = runner.invoke(app, ["gen", "noisy", "--n", "4", "--m", "6", "--flip", "0.5"])
        assert result.exit_code == 0
        assert parse_maxnand(result.stdout).n == 4

    def test_invalid_option_exits_1(self):
        result = runner.invoke(app, ["gen", "noisy", "--flip", "2"])
        assert result.exit_code == 1


class TestReduce:
    def test_ncp2_artifact(self, tmp_path: Path):
        out = tmp_path / "art"
        result = runner.invoke(
            app,
            ["reduce", "-i", str(FIXTURES / "planted3.mn"), "-o", str(out), "--target", "ncp2"],
        )
        assert result.exit_code == 0
        manifest = read_report(out / "manifest.json")
        assert manifest["kind"] == "ncp2"
        assert manifest["intended_file"] == "intended.gf"
        assert (out / "affine.gf").exists()

    def test_unsatisfiable_instance_has_no_intended_word(self, tmp_path: Path):
        out = tmp_path / "art"
        result = runner.invoke(
            app, ["reduce", "-i", str(FIXTURES / "half.mn"), "-o", str(out), "--target", "ncp2"]
        )
        assert result.exit_code == 0
        assert read_report(out / "manifest.json")["intended_file"] is None

    def test_binary_mdq_is_redirected(self, tmp_path: Path):
        result = runner.invoke(
            app,
            ["reduce", "-i", str(FIXTURES / "planted2.mn"), "-o", str(tmp_path / "a"),
             "--target", "mdq", "--q", "2"],
        )
        assert result.exit_code == 1


class TestDistance:
    def test_code_file(self, tmp_path: Path):
        code = write_gfcode(tmp_path / "h.gf", hamming_code(3))
        report = tmp_path / "d.json"
        result = runner.invoke(app, ["distance", "-i", str(code), "--report", str(report)])
        assert result.exit_code == 0
        doc = read_report(report)
        assert doc["distance"] == 3
        assert doc["pass"] is True
        assert doc["affine"] is False

    def test_artifact_directory(self, tmp_path: Path):
        out = tmp_path / "art"
        runner.invoke(
            app, ["reduce", "-i", str(FIXTURES / "half.mn"), "-o", str(out), "--target", "ncp2"]
        )
        report = tmp_path / "d.json"
        result = runner.invoke(app, ["distance", "-i", str(out), "--report", str(report)])
        assert result.exit_code == 0
        doc = read_report(report)
        assert doc["affine"] is True
        assert doc["distance"] == 4

    def test_budget_exceeded_exits_2(self, tmp_path: Path):
        code = write_gfcode(tmp_path / "big.gf", identity_code(field_make(3), 10))
        result = runner.invoke(app, ["distance", "-i", str(code), "--budget", "1000"])
        assert result.exit_code == 2

    def test_only_exact_search(self, tmp_path: Path):
        code = write_gfcode(tmp_path / "h.gf", hamming_code(3))
        result = runner.invoke(app, ["distance", "-i", str(code), "--no-exact"])
        assert result.exit_code == 1

    def test_pass_flag_checks_the_witness(self):
        C = hamming_code(3)
        found = min_distance_exact(C, 1 << 10)
        assert _witness_holds(C, found)
        assert not _witness_holds(C, replace(found, distance=4))
        assert not _witness_holds(C, replace(found, witness=FVector(C.field, [1, 0, 0, 0, 0, 0, 0]), distance=1))
        assert not _witness_holds(C, DistanceReport(math.inf, None, "exact-enumeration", 0))
        assert not _witness_holds(C, replace(found, witness=FVector(C.field, [0] * 7), distance=0))

    def test_coset_witness(self, F2: FieldSpec):
        A = AffineSubspace(repetition_code(F2, 3), FVector(F2, [1, 0, 0]))
        found = ncp_min_weight(A, 1 << 10)
        assert found.distance == 1
        assert _witness_holds(A, found)


class TestVerify:
    def test_moment_support(self, tmp_path: Path):
        report = tmp_path / "v.json"
        result = runner.invoke(
            app, ["verify", "moment-support", "--q", "3", "--d", "2", "--report", str(report)]
        )
        assert result.exit_code == 0
        doc = read_report(report)
        assert doc["pass"] is True
        assert doc["plan"] == "verify moment-support"
        assert doc["checks"][0]["measured"] == "3"

    def test_unknown_check_exits_1(self):
        assert runner.invoke(app, ["verify", "lemma-9"]).exit_code == 1

    def test_missing_parameter_exits_1(self):
        assert runner.invoke(app, ["verify", "tensor-distance", "--code", "simplex:3"]).exit_code == 1


class TestExperiment:
    def test_soundness(self, tmp_path: Path):
        report = tmp_path / "e.json"
        result = runner.invoke(
            app,
            ["experiment", "soundness", "-i", str(FIXTURES / "half.mn"),
             "--target", "ncp2", "--report", str(report)],
        )
        assert result.exit_code == 0
        doc = read_report(report)
        assert doc["measured_distance"] == 4
        assert doc["opt"] == "1/2"

    def test_completeness_needs_satisfiable_instance(self):
        result = runner.invoke(
            app, ["experiment", "completeness", "-i", str(FIXTURES / "half.mn"), "--target", "ncp2"]
        )
        assert result.exit_code == 1

    def test_suite(self, tmp_path: Path):
        plan = tmp_path / "plan.yaml"
        plan.write_text("checks:\n  - check: power-sums\n    q: 3\n")
        report = tmp_path / "s.json"
        result = runner.invoke(app, ["experiment", "suite", "--plan", str(plan), "--report", str(report)])
        assert result.exit_code == 0
        assert read_report(report)["pass"] is True


class TestEntryPoint:
    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.stdout

    @pytest.mark.parametrize(
        ("argv", "code"),
        [
            (["gen", "contradiction"], 0),
            (["no-such-command"], 1),
            (["distance", "-i", "/nonexistent.gf"], 1),
        ],
    )
    def test_exit_codes(self, monkeypatch: pytest.MonkeyPatch, argv: list[str], code: int):
        monkeypatch.setattr(sys, "argv", ["mindist", *argv])
        with pytest.raises(SystemExit) as info:
            cli()
        assert info.value.code == code

    @pytest.mark.parametrize(
        ("argv", "message"),
        [
            (["no-such-command"], "No such command"),
            (["distance", "-i", "/nonexistent.gf"], "does not exist"),
        ],
    )
    def test_usage_errors_print_a_message(
        self,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
        argv: list[str],
        message: str,
    ):
        monkeypatch.setattr(sys, "argv", ["mindist", *argv])
        with pytest.raises(SystemExit) as info:
            cli()
        assert info.value.code == 1
        err = capsys.readouterr().err
        assert message in err
        assert "Traceback" not in err


def without_timing(path: Path) -> dict:
    doc = read_report(path)
    doc.pop("runtime_ms")
    return doc


class TestDeterminism:
    @pytest.mark.parametrize("instance_name", ["planted3", "half"])
    def test_artifacts_and_reports_ignore_thread_count(self, tmp_path: Path, instance_name: str):
        psi = str(FIXTURES / f"{instance_name}.mn")
        for threads in ("1", "8"):
            out = tmp_path / f"art{threads}"
            reduced = runner.invoke(
                app, ["reduce", "-i", psi, "-o", str(out), "--target", "ncp2", "--threads", threads]
            )
            assert reduced.exit_code == 0
            measured = runner.invoke(
                app,
                ["distance", "-i", str(tmp_path / "art1"), "--threads", threads,
                 "--report", str(tmp_path / f"d{threads}.json")],
            )
            assert measured.exit_code == 0
            experiment = runner.invoke(
                app,
                ["experiment", "soundness", "-i", psi, "--target", "ncp2", "--threads", threads,
                 "--report", str(tmp_path / f"e{threads}.json")],
            )
            assert experiment.exit_code == 0

        files = sorted(p.name for p in (tmp_path / "art1").iterdir())
        assert files == sorted(p.name for p in (tmp_path / "art8").iterdir())
        for name in files:
            assert (tmp_path / "art1" / name).read_bytes() == (tmp_path / "art8" / name).read_bytes()
        assert without_timing(tmp_path / "d1.json") == without_timing(tmp_path / "d8.json")
        assert without_timing(tmp_path / "e1.json") == without_timing(tmp_path / "e8.json")
