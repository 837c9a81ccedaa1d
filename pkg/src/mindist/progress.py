# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Progress reporting for long enumerations.

Library code type-hints against :class:`ProgressReporter` and defaults to
:class:`NullProgressReporter`, so nothing is printed unless the caller
asks for it.  The CLI passes a :class:`RichProgressReporter` that renders
messages and bars on stderr.  Results never depend on the reporter.
"""

from __future__ import annotations

import functools
import logging
import threading
import time
from collections.abc import Callable, Generator
from contextlib import AbstractContextManager, contextmanager
from dataclasses import dataclass, field
from enum import IntEnum
from typing import ParamSpec, Protocol, TypeVar, runtime_checkable

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TaskID,
    TextColumn,
    TimeElapsedColumn,
)

from .errors import MindistError

logger = logging.getLogger(__name__)

P = ParamSpec("P")
R = TypeVar("R")


class MessageType(IntEnum):
    """Message types for progress output."""

    INFO = 0  # Regular info (blue)
    SUCCESS = 1  # Success with checkmark (green)
    WARNING = 2  # Warning (yellow)
    ERROR = 3  # Error (red)
    DIM = 4  # Muted/secondary info (gray)
    HINT = 5  # Hint for user action


_STYLES = {
    MessageType.INFO: ("blue", ""),
    MessageType.SUCCESS: ("green", "✓ "),
    MessageType.WARNING: ("yellow", "! "),
    MessageType.ERROR: ("red", "✗ "),
    MessageType.DIM: ("dim", ""),
    MessageType.HINT: ("cyan", "→ "),
}


# =============================================================================
# Progress bars
# =============================================================================


@dataclass
class ProgressBar:
    """Handle for an active bar.  ``advance`` is safe to call from workers."""

    _progress: Progress
    _task: TaskID
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def update(self, current: int) -> None:
        with self._lock:
            self._progress.update(self._task, completed=current)

    def advance(self, amount: int = 1) -> None:
        with self._lock:
            self._progress.advance(self._task, amount)

    def complete(self, success: bool = True, message: str = "") -> None:
        self._progress.remove_task(self._task)
        if message:
            self._progress.console.print(
                f"[{'green' if success else 'red'}]{message}[/]"
            )


class NullProgressBar:
    """No-op progress bar for contexts without progress reporting."""

    def update(self, current: int) -> None:
        pass

    def advance(self, amount: int = 1) -> None:
        pass

    def complete(self, success: bool = True, message: str = "") -> None:
        pass


# =============================================================================
# Reporters
# =============================================================================


@runtime_checkable
class ProgressReporter(Protocol):
    """Protocol for progress reporting during enumerations and builds."""

    def info(self, message: str, indent: int | None = None) -> None: ...

    def success(self, message: str, indent: int | None = None) -> None: ...

    def warning(self, message: str, indent: int | None = None) -> None: ...

    def error(self, message: str, indent: int | None = None) -> None: ...

    def dim(self, message: str, indent: int | None = None) -> None: ...

    def hint(self, message: str, indent: int | None = None) -> None: ...

    def start_progress(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
    ) -> ProgressBar | NullProgressBar: ...

    def track(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
        success_message: str = "",
    ) -> AbstractContextManager[ProgressBar | NullProgressBar]: ...

    def indented(self, levels: int = 1) -> ProgressReporter: ...


class NullProgressReporter:
    """No-op implementation of ProgressReporter, the library default."""

    def info(self, message: str, indent: int | None = None) -> None:
        pass

    def success(self, message: str, indent: int | None = None) -> None:
        pass

    def warning(self, message: str, indent: int | None = None) -> None:
        pass

    def error(self, message: str, indent: int | None = None) -> None:
        pass

    def dim(self, message: str, indent: int | None = None) -> None:
        pass

    def hint(self, message: str, indent: int | None = None) -> None:
        pass

    def start_progress(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
    ) -> NullProgressBar:
        return NullProgressBar()

    @contextmanager
    def track(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
        success_message: str = "",
    ) -> Generator[NullProgressBar, None, None]:
        yield NullProgressBar()

    def indented(self, levels: int = 1) -> NullProgressReporter:
        return self


@dataclass
class RichProgressReporter:
    """Renders messages and bars with ``rich`` on stderr.

    Usage::

        reporter = RichProgressReporter()
        with reporter.track("Enumerating codewords", total=q**k) as bar:
            for chunk in chunks:
                bar.advance(len(chunk))
    """

    console: Console = field(default_factory=lambda: Console(stderr=True))
    _indent: int = 0

    def _emit(self, kind: MessageType, message: str, indent: int | None) -> None:
        level = indent if indent is not None else self._indent
        style, prefix = _STYLES[kind]
        self.console.print(f"{'  ' * level}[{style}]{prefix}{message}[/]", highlight=False)

    def info(self, message: str, indent: int | None = None) -> None:
        logger.info(message)
        self._emit(MessageType.INFO, message, indent)

    def success(self, message: str, indent: int | None = None) -> None:
        logger.info(message)
        self._emit(MessageType.SUCCESS, message, indent)

    def warning(self, message: str, indent: int | None = None) -> None:
        logger.warning(message)
        self._emit(MessageType.WARNING, message, indent)

    def error(self, message: str, indent: int | None = None) -> None:
        logger.error(message)
        self._emit(MessageType.ERROR, message, indent)

    def dim(self, message: str, indent: int | None = None) -> None:
        logger.debug(message)
        self._emit(MessageType.DIM, message, indent)

    def hint(self, message: str, indent: int | None = None) -> None:
        logger.info(message)
        self._emit(MessageType.HINT, message, indent)

    def start_progress(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
    ) -> ProgressBar:
        """Start a progress bar; call ``complete()`` or use :meth:`track`."""
        level = indent if indent is not None else self._indent
        progress = Progress(
            TextColumn("  " * level + "{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.console,
            transient=True,
        )
        progress.start()
        task = progress.add_task(description, total=total if total >= 0 else None)
        logger.debug(
            "Progress started: %s (total=%s)",
            description,
            total if total >= 0 else "indeterminate",
        )
        return _StoppingBar(progress, task)

    @contextmanager
    def track(
        self,
        description: str,
        total: int = -1,
        indent: int | None = None,
        success_message: str = "",
    ) -> Generator[ProgressBar, None, None]:
        bar = self.start_progress(description, total, indent)
        try:
            yield bar
            bar.complete(success=True, message=success_message)
        except Exception:
            bar.complete(success=False)
            raise

    def indented(self, levels: int = 1) -> RichProgressReporter:
        return RichProgressReporter(console=self.console, _indent=self._indent + levels)


@dataclass
class _StoppingBar(ProgressBar):
    """A bar that owns its ``Progress`` display and stops it on completion."""

    def complete(self, success: bool = True, message: str = "") -> None:
        super().complete(success, message)
        self._progress.stop()


# =============================================================================
# Operation decorator
# =============================================================================


def operation(
    kind: str,
    description: str,
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Log start, completion and failures of a top-level operation.

    ``description`` may use ``{param}`` placeholders filled from keyword
    arguments.  Expected failures (:class:`MindistError`) are logged at
    WARNING and re-raised untouched; anything else is logged with a
    traceback as an internal error.

    Example::

        @operation("reduce", "Reducing {target} instance")
        def reduce_instance(*, target: str, ...) -> ReductionArtifact: ...
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            try:
                desc = description.format(**kwargs)
            except (KeyError, IndexError):
                desc = description
            logger.info("Operation %s starting: %s", kind, desc)
            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except MindistError as e:
                logger.warning("Operation %s failed: %s", kind, e)
                raise
            except Exception:
                logger.exception("Operation %s failed with an internal error", kind)
                raise
            logger.info(
                "Operation %s completed in %.1f ms",
                kind,
                (time.perf_counter() - started) * 1000,
            )
            return result

        return wrapper

    return decorator
