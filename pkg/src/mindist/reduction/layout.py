# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Named blocks of variables and the output projection.

A reduction's unknowns are grouped into blocks (``Ye[1]``, ``Z[3][5]``,
``S[0]``, ...) laid out back to back in declaration order.  Indices
inside a block are row-major over its shape, so ``Z[i][j]`` entry
``(x, y)`` sits at ``start + x * q + y``.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatch, UsageError

Coords = npt.NDArray[np.intp]


def ye(e: int) -> str:
    return f"Ye[{e}]"


def yef(e: int, f: int) -> str:
    return f"Yef[{e}][{f}]"


def z(i: int, j: int) -> str:
    return f"Z[{i}][{j}]"


def s(c: int) -> str:
    return f"S[{c}]"


@dataclass(frozen=True)
class Block:
    """A contiguous run of variables with a shape."""

    name: str
    shape: tuple[int, ...]
    start: int

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    @property
    def stop(self) -> int:
        return self.start + self.size

    def coords(self) -> Coords:
        """Every coordinate of the block, row-major."""
        return np.arange(self.start, self.stop, dtype=np.intp)

    def grid(self) -> Coords:
        """Coordinates arranged in the block's shape."""
        return self.coords().reshape(self.shape)

    def coord(self, *index: int) -> int:
        if len(index) != len(self.shape):
            raise DimensionMismatch(f"{self.name} takes {len(self.shape)} indices, got {len(index)}")
        for i, extent in zip(index, self.shape, strict=True):
            if not 0 <= i < extent:
                raise IndexError(f"index {index} outside {self.name}{list(self.shape)}")
        return self.start + int(np.ravel_multi_index(index, self.shape))


class VariableLayout:
    """Disjoint blocks covering ``[0, total)`` in declaration order."""

    def __init__(self) -> None:
        self._blocks: dict[str, Block] = {}
        self.total = 0

    def add(self, name: str, shape: Sequence[int]) -> Block:
        if name in self._blocks:
            raise UsageError(f"block {name} declared twice")
        block = Block(name, tuple(int(x) for x in shape), self.total)
        self._blocks[name] = block
        self.total = block.stop
        return block

    def __getitem__(self, name: str) -> Block:
        try:
            return self._blocks[name]
        except KeyError:
            raise UsageError(f"no block named {name}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._blocks

    def __iter__(self) -> Iterator[Block]:
        return iter(self._blocks.values())

    def __len__(self) -> int:
        return len(self._blocks)

    def block_of(self, coordinate: int) -> Block:
        """The block holding ``coordinate``."""
        for block in self._blocks.values():
            if block.start <= coordinate < block.stop:
                return block
        raise IndexError(f"coordinate {coordinate} outside [0, {self.total})")

    def __repr__(self) -> str:
        return f"VariableLayout({len(self)} blocks, {self.total} variables)"


class ProjectionEntry(NamedTuple):
    """Output takes variable ``source``, copied ``repeat`` times in a row."""

    source: int
    repeat: int


def expand_projection(entries: Sequence[ProjectionEntry]) -> Coords:
    """Source variable of every output coordinate."""
    if not entries:
        return np.zeros(0, dtype=np.intp)
    src = np.array([e.source for e in entries], dtype=np.intp)
    rep = np.array([e.repeat for e in entries], dtype=np.intp)
    return np.repeat(src, rep)


def z_then_s_projection(layout: VariableLayout, N: int, m: int, r: int) -> list[ProjectionEntry]:
    """All ``Z[i][j]`` coordinates once, then every ``S[c]`` coordinate ``r`` times."""
    entries = [
        ProjectionEntry(int(v), 1)
        for i in range(N)
        for j in range(N)
        for v in layout[z(i, j)].coords()
    ]
    entries.extend(
        ProjectionEntry(int(v), r) for c in range(m) for v in layout[s(c)].coords()
    )
    return entries
