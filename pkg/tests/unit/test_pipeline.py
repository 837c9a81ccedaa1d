# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for the ordered step registry."""

from __future__ import annotations

from mindist.pipeline import Pipeline


def make_pipeline() -> tuple[Pipeline[list[str]], list[str]]:
    pipeline = Pipeline[list[str]]("test")

    @pipeline.step(order=300)
    def third(ctx: list[str]) -> None:
        ctx.append("third")

    @pipeline.step
    def default_a(ctx: list[str]) -> None:
        ctx.append("default_a")

    @pipeline.step(order=100)
    def first(ctx: list[str]) -> None:
        ctx.append("first")

    @pipeline.step
    def default_b(ctx: list[str]) -> None:
        ctx.append("default_b")

    return pipeline, []


class TestPipeline:
    def test_runs_by_order_then_registration(self):
        pipeline, ctx = make_pipeline()
        pipeline.run(ctx)
        assert ctx == ["first", "third", "default_a", "default_b"]

    def test_len_and_repr(self):
        pipeline, _ = make_pipeline()
        assert len(pipeline) == 4
        assert repr(pipeline) == (
            "Pipeline('test', [first(100), third(300), default_a(500), default_b(500)])"
        )

    def test_step_returns_the_function(self):
        pipeline = Pipeline[list[str]]("bare")

        def step(ctx: list[str]) -> None:
            ctx.append("x")

        assert pipeline.step(step) is step

    def test_iterates_sorted_steps(self):
        pipeline, _ = make_pipeline()
        assert [(s.name, s.order) for s in pipeline] == [
            ("first", 100),
            ("third", 300),
            ("default_a", 500),
            ("default_b", 500),
        ]
