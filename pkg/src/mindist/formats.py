# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""File formats: versioned text files and JSON documents.

Text formats start with a header line naming the format and its version;
blank lines and lines starting with ``#`` are ignored everywhere::

    maxnand 1 <n> <m>          then m lines  <k> <i> <j>   (1-indexed)
    gfcode 1 <q> <n> <k>       then k generator rows of n entries
    gfaffine 1 <q> <n> <k>     then k generator rows and one offset row
    evalset 1 <q> <n> <N>      then N points of n entries

Field elements are written as their indices ``0..q-1``.

A reduction artifact is a directory holding ``code.gf`` (``affine.gf`` for
the nearest codeword target), ``manifest.json`` and optionally
``intended.gf``, a one-row ``gfcode`` file spanning the intended codeword.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator

from .codes import AffineSubspace, LinearCode, homogeneous_linear_code
from .csp import MaxNandInstance
from .errors import MindistError, ParseError, UsageError
from .gf import FieldSpec, field_make
from .linalg import FMatrix, FVector
from .prg import EvaluationSet
from .reduction.artifact import Bounds, ReductionArtifact, ReductionParams
from .reduction.layout import ProjectionEntry, VariableLayout

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
CODE_FILE = "code.gf"
AFFINE_FILE = "affine.gf"
MANIFEST_FILE = "manifest.json"
INTENDED_FILE = "intended.gf"


# =============================================================================
# Text formats
# =============================================================================


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


class _Body:
    """Header-checked iterator over the data rows of a text file."""

    def __init__(self, text: str, kind: str, fields: int) -> None:
        self._rows = _lines(text)
        try:
            lineno, header = next(self._rows)
        except StopIteration:
            raise ParseError(f"empty {kind} file") from None
        if header[0] != kind:
            raise ParseError(f"expected a {kind} header, got {header[0]!r}", lineno)
        values = _ints(header[1:], lineno)
        if len(values) != fields + 1:
            raise ParseError(f"{kind} header takes {fields + 1} numbers, got {len(values)}", lineno)
        if values[0] != FORMAT_VERSION:
            raise ParseError(f"unsupported {kind} version {values[0]}", lineno)
        if any(v < 0 for v in values[1:]):
            raise ParseError(f"negative count in {kind} header", lineno)
        self.kind = kind
        self.header = values[1:]
        self.lineno = lineno

    def row(self, width: int, what: str) -> list[int]:
        try:
            lineno, tokens = next(self._rows)
        except StopIteration:
            raise ParseError(f"{self.kind} file ends before {what}") from None
        self.lineno = lineno
        values = _ints(tokens, lineno)
        if len(values) != width:
            raise ParseError(f"{what} has {len(values)} entries, expected {width}", lineno)
        return values

    def elements(self, F: FieldSpec, width: int, what: str) -> list[int]:
        values = self.row(width, what)
        bad = [v for v in values if not 0 <= v < F.q]
        if bad:
            raise ParseError(f"{what} has entry {bad[0]} outside [0, {F.q})", self.lineno)
        return values

    def finish(self) -> None:
        extra = next(self._rows, None)
        if extra is not None:
            raise ParseError(f"unexpected data after the last {self.kind} row", extra[0])


def _field(q: int, lineno: int | None = None) -> FieldSpec:
    try:
        return field_make(q)
    except MindistError as e:
        raise ParseError(str(e), lineno) from e


def _matrix_text(rows: np.ndarray) -> list[str]:
    return [" ".join(str(int(x)) for x in row) for row in rows]


def parse_maxnand(text: str) -> MaxNandInstance:
    """Instance from ``maxnand 1`` text."""
    body = _Body(text, "maxnand", 2)
    n, m = body.header
    constraints = []
    for c in range(m):
        k, i, j = body.row(3, f"constraint {c + 1}")
        for v in (k, i, j):
            if not 1 <= v <= n:
                raise ParseError(f"variable {v} outside [1, {n}]", body.lineno)
        constraints.append((k - 1, i - 1, j - 1))
    body.finish()
    try:
        return MaxNandInstance(n, tuple(constraints))
    except UsageError as e:
        raise ParseError(str(e)) from e


def format_maxnand(psi: MaxNandInstance) -> str:
    lines = [f"maxnand {FORMAT_VERSION} {psi.n} {psi.m}"]
    lines.extend(f"{k + 1} {i + 1} {j + 1}" for k, i, j in psi.constraints)
    return "\n".join(lines) + "\n"


def _generator(body: _Body, F: FieldSpec, n: int, k: int) -> FMatrix:
    rows = [body.elements(F, n, f"generator row {r + 1}") for r in range(k)]
    return FMatrix(F, np.array(rows, dtype=np.int64).reshape(k, n))


def _code(G: FMatrix, name: str) -> LinearCode:
    try:
        return LinearCode(G, name=name)
    except MindistError as e:
        raise ParseError(f"{name}: {e}") from e


def parse_gfcode(text: str, name: str = "C") -> LinearCode:
    """Code from ``gfcode 1`` text; the rows must be independent."""
    body = _Body(text, "gfcode", 3)
    q, n, k = body.header
    F = _field(q, body.lineno)
    G = _generator(body, F, n, k)
    body.finish()
    return _code(G, name)


def format_gfcode(C: LinearCode) -> str:
    lines = [f"gfcode {FORMAT_VERSION} {C.field.q} {C.n} {C.k}"]
    lines.extend(_matrix_text(C.G.entries))
    return "\n".join(lines) + "\n"


def parse_gfaffine(text: str, name: str = "S") -> AffineSubspace:
    """Coset from ``gfaffine 1`` text: generator rows, then the offset."""
    body = _Body(text, "gfaffine", 3)
    q, n, k = body.header
    F = _field(q, body.lineno)
    G = _generator(body, F, n, k)
    offset = body.elements(F, n, "offset row")
    body.finish()
    return AffineSubspace(_code(G, name), FVector(F, np.array(offset, dtype=np.int64)))


def format_gfaffine(A: AffineSubspace) -> str:
    C = A.code
    lines = [f"gfaffine {FORMAT_VERSION} {C.field.q} {C.n} {C.k}"]
    lines.extend(_matrix_text(C.G.entries))
    lines.extend(_matrix_text(A.offset.entries[None, :]))
    return "\n".join(lines) + "\n"


def parse_evalset(text: str, provenance: str = "explicit-file") -> EvaluationSet:
    body = _Body(text, "evalset", 3)
    q, n, size = body.header
    F = _field(q, body.lineno)
    if size < 1:
        raise ParseError("an evaluation set needs at least one point", body.lineno)
    points = [body.elements(F, n, f"point {p + 1}") for p in range(size)]
    body.finish()
    return EvaluationSet(F, n, np.array(points, dtype=np.int64).reshape(size, n), provenance)


def format_evalset(R: EvaluationSet) -> str:
    lines = [f"evalset {FORMAT_VERSION} {R.field.q} {R.n} {len(R)}"]
    lines.extend(_matrix_text(R.points))
    return "\n".join(lines) + "\n"


def _read(path: Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _write(path: Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.debug("wrote %s (%d bytes)", path, len(text))
    return path


def read_maxnand(path: Path) -> MaxNandInstance:
    return parse_maxnand(_read(path))


def write_maxnand(path: Path, psi: MaxNandInstance) -> Path:
    return _write(path, format_maxnand(psi))


def read_gfcode(path: Path) -> LinearCode:
    return parse_gfcode(_read(path), name=Path(path).stem)


def write_gfcode(path: Path, C: LinearCode) -> Path:
    return _write(path, format_gfcode(C))


def read_gfaffine(path: Path) -> AffineSubspace:
    return parse_gfaffine(_read(path), name=Path(path).stem)


def write_gfaffine(path: Path, A: AffineSubspace) -> Path:
    return _write(path, format_gfaffine(A))


def read_evalset(path: Path) -> EvaluationSet:
    return parse_evalset(_read(path))


def write_evalset(path: Path, R: EvaluationSet) -> Path:
    return _write(path, format_evalset(R))


def read_code_or_affine(path: Path) -> LinearCode | AffineSubspace:
    """Whichever of ``gfcode``/``gfaffine`` the file's header names."""
    text = _read(path)
    first = next(_lines(text), None)
    if first is not None and first[1][0] == "gfaffine":
        return parse_gfaffine(text, name=Path(path).stem)
    return parse_gfcode(text, name=Path(path).stem)


# =============================================================================
# JSON documents
# =============================================================================


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not fractions")
    if isinstance(value, (Fraction, int, str)):
        return Fraction(value)
    raise ValueError(f"cannot read {value!r} as a fraction")


# Exact rationals travel as strings such as "3/2".
FractionStr = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(str, return_type=str),
]


class Document(BaseModel):
    """Base for every JSON document mindist writes."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    def to_json(self) -> str:
        """Stable JSON: sorted keys, two-space indent, trailing newline."""
        return json.dumps(self.model_dump(mode="json", by_alias=True), sort_keys=True, indent=2) + "\n"


def write_document(path: Path, doc: Document) -> Path:
    return _write(path, doc.to_json())


class InstanceModel(Document):
    n: int
    constraints: list[tuple[int, int, int]]

    @classmethod
    def of(cls, psi: MaxNandInstance) -> InstanceModel:
        return cls(n=psi.n, constraints=[(k + 1, i + 1, j + 1) for k, i, j in psi.constraints])

    def instance(self) -> MaxNandInstance:
        return MaxNandInstance(self.n, tuple((k - 1, i - 1, j - 1) for k, i, j in self.constraints))


class BlockModel(Document):
    name: str
    shape: list[int]
    start: int


class BoundsModel(Document):
    completeness: int
    floor: FractionStr | None = None
    active_branch: Literal["assignment", "structure"] | None = None
    delta: FractionStr | None = None
    epsilon: FractionStr | None = None

    @classmethod
    def of(cls, b: Bounds) -> BoundsModel:
        return cls(
            completeness=b.completeness_weight,
            floor=b.soundness_floor,
            active_branch=b.active_branch,
            delta=b.delta,
            epsilon=b.epsilon,
        )

    def bounds(self) -> Bounds:
        return Bounds(self.completeness, self.floor, self.active_branch, self.delta, self.epsilon)


class PointsModel(Document):
    provenance: str
    points: list[list[int]]


class ArtifactManifest(Document):
    """``manifest.json`` of an artifact directory."""

    format: Literal["mindist-artifact"] = "mindist-artifact"
    version: int = FORMAT_VERSION
    kind: Literal["ncp2", "mindist2", "mindistq"]
    q: int
    n: int
    m: int
    N: int
    r: int
    output_length: int
    dimension: int
    injective: bool
    instance: InstanceModel
    bounds: BoundsModel
    blocks: list[BlockModel]
    projection: list[tuple[int, int]]
    encoder: list[list[int]] | None = None
    points: PointsModel | None = None
    provenance: dict[str, int] = {}
    code_file: str
    intended_file: str | None = None

    @classmethod
    def of(cls, artifact: ReductionArtifact, *, intended: bool = False) -> ArtifactManifest:
        p = artifact.params
        encoder = None
        if artifact.kind == "mindist2" and artifact.encoder is not None:
            encoder = artifact.encoder.G.entries.tolist()
        points = None
        if artifact.points is not None:
            points = PointsModel(
                provenance=artifact.points.provenance,
                points=artifact.points.points.tolist(),
            )
        return cls(
            kind=artifact.kind,
            q=p.q,
            n=p.n,
            m=p.m,
            N=p.N,
            r=p.r,
            output_length=artifact.output_length,
            dimension=artifact.dimension,
            injective=artifact.injective,
            instance=InstanceModel.of(artifact.psi),
            bounds=BoundsModel.of(artifact.bounds),
            blocks=[BlockModel(name=b.name, shape=list(b.shape), start=b.start) for b in artifact.layout],
            projection=[(e.source, e.repeat) for e in artifact.projection],
            encoder=encoder,
            points=points,
            provenance=dict(artifact.provenance),
            code_file=AFFINE_FILE if artifact.affine is not None else CODE_FILE,
            intended_file=INTENDED_FILE if intended else None,
        )


def _layout(blocks: list[BlockModel]) -> VariableLayout:
    layout = VariableLayout()
    for b in blocks:
        block = layout.add(b.name, b.shape)
        if block.start != b.start:
            raise ParseError(f"block {b.name} starts at {b.start}, expected {block.start}")
    return layout


def save_artifact(
    artifact: ReductionArtifact, directory: Path, *, intended: FVector | None = None
) -> ArtifactManifest:
    """Write ``artifact`` (and optionally its intended codeword) to ``directory``."""
    directory = Path(directory)
    manifest = ArtifactManifest.of(artifact, intended=intended is not None)
    if artifact.affine is not None:
        write_gfaffine(directory / AFFINE_FILE, artifact.affine)
    else:
        write_gfcode(directory / CODE_FILE, artifact.code)
    if intended is not None:
        word = FMatrix(artifact.field, intended.entries[None, :])
        write_gfcode(directory / INTENDED_FILE, LinearCode(word, name="intended"))
    write_document(directory / MANIFEST_FILE, manifest)
    logger.info("saved %r to %s", artifact, directory)
    return manifest


def read_manifest(directory: Path) -> ArtifactManifest:
    text = _read(Path(directory) / MANIFEST_FILE)
    try:
        return ArtifactManifest.model_validate_json(text)
    except ValueError as e:
        raise ParseError(f"{directory}/{MANIFEST_FILE}: {e}") from e


def load_artifact(directory: Path) -> ReductionArtifact:
    """Artifact read back from ``directory``.

    The result has no solution basis or constraint system; its layout,
    projection, encoder and evaluation points are restored.
    """
    directory = Path(directory)
    manifest = read_manifest(directory)
    F = _field(manifest.q)
    affine: AffineSubspace | None = None
    if manifest.kind == "ncp2":
        affine = read_gfaffine(directory / manifest.code_file)
        code = affine.code
    else:
        code = read_gfcode(directory / manifest.code_file)
    if code.field != F or code.n != manifest.output_length or code.k != manifest.dimension:
        raise ParseError(f"{manifest.code_file} does not match its manifest")

    psi = manifest.instance.instance()
    encoder: LinearCode | None = None
    points: EvaluationSet | None = None
    if manifest.encoder is not None:
        encoder = _code(FMatrix(F, np.array(manifest.encoder, dtype=np.int64)), "encoder")
    if manifest.points is not None:
        points = EvaluationSet(
            F, psi.n, np.array(manifest.points.points, dtype=np.int64), manifest.points.provenance
        )
        encoder = homogeneous_linear_code(F, psi.n, points)

    return ReductionArtifact(
        kind=manifest.kind,
        psi=psi,
        params=ReductionParams(q=manifest.q, n=manifest.n, m=manifest.m, N=manifest.N, r=manifest.r),
        code=code,
        layout=_layout(manifest.blocks),
        projection=tuple(ProjectionEntry(s, r) for s, r in manifest.projection),
        bounds=manifest.bounds.bounds(),
        injective=manifest.injective,
        affine=affine,
        encoder=encoder,
        points=points,
        provenance=dict(manifest.provenance),
    )


def load_intended(directory: Path) -> FVector | None:
    """The stored intended codeword, if the artifact has one."""
    manifest = read_manifest(directory)
    if manifest.intended_file is None:
        return None
    C = read_gfcode(Path(directory) / manifest.intended_file)
    if C.k != 1:
        raise ParseError(f"{manifest.intended_file} must hold exactly one row")
    return C.G.row(0)
