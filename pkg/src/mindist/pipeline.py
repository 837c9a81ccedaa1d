# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Ordered registries of construction steps.

Each reduction owns one module-level :class:`Pipeline`.  Its step
modules decorate functions with :meth:`Pipeline.step` when imported, so
adding a constraint group means adding a function, not editing a list.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from typing import Generic, NamedTuple, TypeVar, overload

logger = logging.getLogger(__name__)

Ctx = TypeVar("Ctx")

StepFn = Callable[[Ctx], None]

DEFAULT_ORDER = 500


class Step(NamedTuple, Generic[Ctx]):
    order: int
    seq: int
    fn: StepFn[Ctx]

    @property
    def name(self) -> str:
        return self.fn.__name__


class Pipeline(Generic[Ctx]):
    """Steps sorted by ``order``, ties broken by registration.

    Import order across step modules is not something to rely on, so
    every step that depends on another gets an explicit, larger order.
    Orders are spaced by 100.

    Example::

        mindist2 = Pipeline[Mindist2Context]("mindist2")

        @mindist2.step(order=100)
        def declare_variables(ctx: Mindist2Context) -> None: ...

        @mindist2.step
        def nand_blocks(ctx: Mindist2Context) -> None: ...
    """

    def __init__(self, name: str) -> None:
        self.name = name
        self._steps: list[Step[Ctx]] = []

    @overload
    def step(self, fn: StepFn[Ctx]) -> StepFn[Ctx]: ...
    @overload
    def step(self, *, order: int) -> Callable[[StepFn[Ctx]], StepFn[Ctx]]: ...

    def step(
        self,
        fn: StepFn[Ctx] | None = None,
        *,
        order: int = DEFAULT_ORDER,
    ) -> StepFn[Ctx] | Callable[[StepFn[Ctx]], StepFn[Ctx]]:
        """Decorator registering a step; usable bare or as ``step(order=...)``."""

        def register(f: StepFn[Ctx]) -> StepFn[Ctx]:
            self._steps.append(Step(order, len(self._steps), f))
            return f

        return register if fn is None else register(fn)

    def __iter__(self) -> Iterator[Step[Ctx]]:
        return iter(sorted(self._steps, key=lambda s: (s.order, s.seq)))

    def run(self, ctx: Ctx) -> None:
        """Apply every step to ``ctx`` in order."""
        started = time.perf_counter()
        for s in self:
            t0 = time.perf_counter()
            s.fn(ctx)
            logger.debug("%s/%s took %.3fs", self.name, s.name, time.perf_counter() - t0)
        logger.info("%s: %d steps in %.3fs", self.name, len(self), time.perf_counter() - started)

    def __len__(self) -> int:
        return len(self._steps)

    def __repr__(self) -> str:
        names = ", ".join(f"{s.name}({s.order})" for s in self)
        return f"Pipeline({self.name!r}, [{names}])"
