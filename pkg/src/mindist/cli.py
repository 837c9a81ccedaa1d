# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Command-line interface.

Usage:
    mindist gen planted --n 4 --m 8 --seed 7 -o psi.mn
    mindist reduce --target mdq --q 3 -i psi.mn -o out/
    mindist distance -i out/code.gf
    mindist verify moment-support --q 3 --d 2
    mindist experiment soundness -i psi.mn --q 3
    mindist experiment suite --plan data/suite.yaml

Reports are JSON on stdout (or ``--report PATH``).  Exit codes: 0 when
every report passes, 1 for usage and parse errors, 2 when a search
exceeds its budget, 3 when a guaranteed property fails.
"""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from . import __version__
from .codes import AffineSubspace, LinearCode
from .config import MindistConfig, load_config
from .csp import MAX_EXACT_VARIABLES, contradiction, gen_noisy, gen_planted, opt_exact, pad_variables
from .distance import DistanceReport, min_distance_exact, ncp_min_weight
from .errors import BudgetExceeded, InvariantFailure, MindistError, UsageError
from .formats import (
    Document,
    format_maxnand,
    load_artifact,
    read_code_or_affine,
    read_maxnand,
    save_artifact,
)
from .progress import NullProgressReporter, ProgressReporter, RichProgressReporter
from .reduction import intended_codeword
from .run_options import RunOptions, option_help, parse_run_options
from .verify import (
    DistanceDocument,
    ExperimentReport,
    SuiteReport,
    build_artifact,
    enforce,
    run_check,
    run_experiment,
    run_plan,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="mindist",
    help="Gap-preserving reductions from Max NAND to coding problems, with brute-force oracles.",
    no_args_is_help=True,
    add_completion=False,
)
gen_app = typer.Typer(help="Generate Max NAND instances.", no_args_is_help=True)
experiment_app = typer.Typer(help="End-to-end reduction experiments.", no_args_is_help=True)
app.add_typer(gen_app, name="gen")
app.add_typer(experiment_app, name="experiment")

err_console = Console(stderr=True)


@dataclass
class _State:
    config: MindistConfig
    reporter: ProgressReporter


def _state(ctx: typer.Context) -> _State:
    state = ctx.find_root().obj
    if not isinstance(state, _State):
        state = _State(load_config(), NullProgressReporter())
        ctx.find_root().obj = state
    return state


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Turn expected failures into a message on stderr and their exit code."""
    try:
        yield
    except BudgetExceeded as e:
        if isinstance(e.partial, Document):
            typer.echo(e.partial.to_json(), nl=False)
        err_console.print(f"[yellow]budget exceeded:[/yellow] {e}", highlight=False)
        raise typer.Exit(e.exit_code) from e
    except MindistError as e:
        err_console.print(f"[red]error:[/red] {e}", highlight=False)
        raise typer.Exit(e.exit_code) from e


def _emit(doc: Document, report: Path | None) -> None:
    text = doc.to_json()
    if report is None:
        typer.echo(text, nl=False)
    else:
        report.write_text(text)
        err_console.print(f"report written to {report}", highlight=False)


def _options(ctx: typer.Context, **raw: Any) -> RunOptions:
    return parse_run_options(raw, _state(ctx).config)


# =============================================================================
# Shared options
# =============================================================================

ReportOpt = Annotated[Optional[Path], typer.Option("--report", help="Write the JSON report here")]
InputOpt = Annotated[Path, typer.Option("--input", "-i", help="Max NAND instance file", exists=True, dir_okay=False)]
TargetOpt = Annotated[Optional[str], typer.Option(help=option_help("target"))]
QOpt = Annotated[Optional[int], typer.Option("--q", help=option_help("q"))]
ROpt = Annotated[Optional[str], typer.Option("--r", help=option_help("r"))]
PointsOpt = Annotated[Optional[str], typer.Option(help=option_help("points"))]
BiasOpt = Annotated[Optional[float], typer.Option(help=option_help("bias"))]
BudgetOpt = Annotated[Optional[int], typer.Option(help=option_help("budget"))]
ThreadsOpt = Annotated[Optional[int], typer.Option(help=option_help("threads"))]
SeedOpt = Annotated[Optional[int], typer.Option(help=option_help("seed"))]
SamplesOpt = Annotated[Optional[int], typer.Option(help=option_help("samples"))]


def _version(value: bool) -> None:
    if value:
        typer.echo(f"mindist {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log debug output to stderr")] = False,
    progress: Annotated[bool, typer.Option("--progress/--no-progress", help="Show progress bars")] = False,
    version: Annotated[
        bool, typer.Option("--version", callback=_version, is_eager=True, help="Print the version")
    ] = False,
) -> None:
    _setup_logging(verbose)
    reporter: ProgressReporter = RichProgressReporter(console=err_console) if progress else NullProgressReporter()
    ctx.obj = _State(load_config(), reporter)


# =============================================================================
# gen
# =============================================================================


def _write_instance(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text)
        err_console.print(f"wrote {output}", highlight=False)


OutputOpt = Annotated[Optional[Path], typer.Option("--output", "-o", help="Output file (stdout when omitted)")]


@gen_app.command("planted")
def gen_planted_cmd(
    ctx: typer.Context,
    n: Annotated[Optional[int], typer.Option("--n", help=option_help("n"))] = None,
    m: Annotated[Optional[int], typer.Option("--m", help=option_help("m"))] = None,
    seed: SeedOpt = None,
    output: OutputOpt = None,
) -> None:
    """A satisfiable instance around a planted assignment."""
    with _exit_codes():
        opts = _options(ctx, n=n, m=m, seed=seed)
        psi, beta = gen_planted(opts.n, opts.m, opts.seed)
        logger.info("planted assignment %s", "".join(map(str, beta.bits)))
        _write_instance(format_maxnand(psi), output)


@gen_app.command("noisy")
def gen_noisy_cmd(
    ctx: typer.Context,
    n: Annotated[Optional[int], typer.Option("--n", help=option_help("n"))] = None,
    m: Annotated[Optional[int], typer.Option("--m", help=option_help("m"))] = None,
    flip: Annotated[Optional[float], typer.Option(help=option_help("flip"))] = None,
    seed: SeedOpt = None,
    output: OutputOpt = None,
) -> None:
    """A planted instance with some constraints rewired against the plant."""
    with _exit_codes():
        opts = _options(ctx, n=n, m=m, flip=flip, seed=seed)
        _write_instance(format_maxnand(gen_noisy(opts.n, opts.m, opts.flip, opts.seed)), output)


@gen_app.command("contradiction")
def gen_contradiction_cmd(
    pad: Annotated[int, typer.Option(help="Pad to this many variables with covering constraints", min=1)] = 1,
    output: OutputOpt = None,
) -> None:
    """The one-constraint instance no assignment satisfies."""
    with _exit_codes():
        _write_instance(format_maxnand(pad_variables(contradiction(), pad)), output)


# =============================================================================
# reduce / distance
# =============================================================================


@app.command()
def reduce(
    ctx: typer.Context,
    input: InputOpt,
    output: Annotated[Path, typer.Option("--output", "-o", help="Artifact directory", file_okay=False)],
    target: TargetOpt = None,
    q: QOpt = None,
    r: ROpt = None,
    points: PointsOpt = None,
    bias: BiasOpt = None,
    threads: ThreadsOpt = None,
) -> None:
    """Build the code for an instance and write it with its manifest."""
    with _exit_codes():
        opts = _options(ctx, target=target, q=q, r=r, points=points, bias=bias, threads=threads)
        psi = read_maxnand(input)
        delta = None
        beta = None
        if psi.n <= MAX_EXACT_VARIABLES:
            opt, beta = opt_exact(psi, threads=opts.threads)
            delta = 1 - opt
        artifact = build_artifact(psi, opts, delta=delta)
        intended = intended_codeword(artifact, beta) if delta == 0 and beta is not None else None
        output.mkdir(parents=True, exist_ok=True)
        manifest = save_artifact(artifact, output, intended=intended)
        err_console.print(_manifest_table(manifest.model_dump(mode="json")))


def _manifest_table(fields: dict[str, Any]) -> Table:
    table = Table(show_header=False, box=None)
    for key in ("kind", "q", "n", "m", "N", "r", "output_length", "dimension", "injective"):
        table.add_row(key, str(fields[key]))
    bounds = fields["bounds"]
    table.add_row("completeness", str(bounds["completeness"]))
    table.add_row("floor", str(bounds["floor"]))
    return table


def _witness_holds(target: LinearCode | AffineSubspace, result: DistanceReport) -> bool:
    """The search result is unbounded only for the zero code, and otherwise
    its witness lies in ``target`` with the reported weight.
    """
    if result.is_infinite or result.witness is None:
        return isinstance(target, LinearCode) and target.k == 0
    w = result.witness
    if isinstance(target, LinearCode) and w.weight == 0:
        return False
    return target.contains(w) and w.weight == result.distance


@app.command()
def distance(
    ctx: typer.Context,
    input: Annotated[Path, typer.Option("--input", "-i", help="gfcode/gfaffine file or artifact directory", exists=True)],
    exact: Annotated[bool, typer.Option("--exact/--no-exact", help="Exhaustive search (the only method)")] = True,
    budget: BudgetOpt = None,
    threads: ThreadsOpt = None,
    report: ReportOpt = None,
) -> None:
    """Exact minimum distance of a code, or minimum weight of an affine space."""
    with _exit_codes():
        if not exact:
            raise UsageError("only the exhaustive search is implemented")
        opts = _options(ctx, budget=budget, threads=threads)
        started = time.perf_counter()
        if input.is_dir():
            artifact = load_artifact(input)
            target = artifact.affine if artifact.affine is not None else artifact.code
        else:
            target = read_code_or_affine(input)
        reporter = _state(ctx).reporter
        if isinstance(target, AffineSubspace):
            code = target.code
            result = ncp_min_weight(target, opts.budget, threads=opts.threads, reporter=reporter)
        else:
            code = target
            result = min_distance_exact(target, opts.budget, threads=opts.threads, reporter=reporter)
        passed = _witness_holds(target, result)
        _emit(
            DistanceDocument(
                code=str(input),
                q=code.field.q,
                n=code.n,
                k=code.k,
                affine=isinstance(target, AffineSubspace),
                distance=None if result.is_infinite else int(result.distance),
                witness=None if result.witness is None else [int(x) for x in result.witness],
                method=result.method,
                enumerated=result.enumerated,
                passed=passed,
                runtime_ms=round((time.perf_counter() - started) * 1000, 3),
            ),
            report,
        )
        if not passed:
            raise InvariantFailure(f"{input}: search witness does not match the reported distance")


# =============================================================================
# verify
# =============================================================================


@app.command()
def verify(
    ctx: typer.Context,
    check: Annotated[str, typer.Argument(help="Check name, e.g. moment-support or tensor-distance")],
    q: Annotated[Optional[int], typer.Option("--q", help="Field order")] = None,
    n: Annotated[Optional[int], typer.Option("--n", help="Number of variables")] = None,
    d: Annotated[Optional[int], typer.Option("--d", help="Degree (every legal degree when omitted)")] = None,
    e: Annotated[Optional[int], typer.Option("--e", help="Degree for nonzero-fraction")] = None,
    code: Annotated[Optional[str], typer.Option(help="Code: simplex:N, hamming:R, rep:Q:N, identity:Q:N, random:Q:N:K:SEED or a file")] = None,
    code2: Annotated[Optional[str], typer.Option(help="Second code for tensor-distance")] = None,
    points: Annotated[Optional[str], typer.Option(help="exhaustive, small-bias or viola")] = None,
    bias: Annotated[Optional[float], typer.Option(help="Bias of the small-bias base set")] = None,
    budget: BudgetOpt = None,
    samples: SamplesOpt = None,
    seed: SeedOpt = None,
    report: ReportOpt = None,
) -> None:
    """Run one oracle check and report measured against claimed bounds."""
    with _exit_codes():
        opts = _options(ctx, budget=budget, samples=samples, seed=seed)
        started = time.perf_counter()
        params = {"q": q, "n": n, "d": d, "e": e, "code": code, "code2": code2, "points": points, "bias": bias}
        reports = run_check(
            check,
            params,
            budget=opts.budget,
            samples=opts.samples,
            seed=opts.seed,
            reporter=_state(ctx).reporter,
        )
        suite = SuiteReport(
            plan=f"verify {check}",
            checks=sorted(reports, key=lambda rep: rep.id),
            passed=all(rep.passed for rep in reports),
            runtime_ms=round((time.perf_counter() - started) * 1000, 3),
        )
        _emit(suite, report)
        enforce(reports)


# =============================================================================
# experiment
# =============================================================================


def _run_experiment(
    ctx: typer.Context, name: str, input: Path, report: Path | None, **raw: Any
) -> None:
    with _exit_codes():
        opts = _options(ctx, **raw)
        psi = read_maxnand(input)
        result: ExperimentReport = run_experiment(
            name, psi, opts, label=input.stem, reporter=_state(ctx).reporter
        )
        _emit(result, report)
        if not result.passed:
            raise InvariantFailure(f"{result.id} failed: {result.checks}")


@experiment_app.command("completeness")
def experiment_completeness_cmd(
    ctx: typer.Context,
    input: InputOpt,
    target: TargetOpt = None,
    q: QOpt = None,
    r: ROpt = None,
    points: PointsOpt = None,
    bias: BiasOpt = None,
    budget: BudgetOpt = None,
    threads: ThreadsOpt = None,
    report: ReportOpt = None,
) -> None:
    """The intended codeword of a satisfiable instance has the designed weight."""
    _run_experiment(ctx, "completeness", input, report, target=target, q=q, r=r,
                    points=points, bias=bias, budget=budget, threads=threads)


@experiment_app.command("soundness")
def experiment_soundness_cmd(
    ctx: typer.Context,
    input: InputOpt,
    target: TargetOpt = None,
    q: QOpt = None,
    r: ROpt = None,
    points: PointsOpt = None,
    bias: BiasOpt = None,
    budget: BudgetOpt = None,
    threads: ThreadsOpt = None,
    report: ReportOpt = None,
) -> None:
    """The minimum distance respects the floor for the measured optimum."""
    _run_experiment(ctx, "soundness", input, report, target=target, q=q, r=r,
                    points=points, bias=bias, budget=budget, threads=threads)


@experiment_app.command("goodcode")
def experiment_goodcode_cmd(
    ctx: typer.Context,
    input: InputOpt,
    target: TargetOpt = None,
    q: QOpt = None,
    r: ROpt = None,
    points: PointsOpt = None,
    bias: BiasOpt = None,
    budget: BudgetOpt = None,
    threads: ThreadsOpt = None,
    report: ReportOpt = None,
) -> None:
    """Dimension and distance of the constructed code are large."""
    _run_experiment(ctx, "goodcode", input, report, target=target, q=q, r=r,
                    points=points, bias=bias, budget=budget, threads=threads)


@experiment_app.command("suite")
def experiment_suite_cmd(
    ctx: typer.Context,
    plan: Annotated[Path, typer.Option(help="YAML experiment plan", exists=True, dir_okay=False)],
    report: ReportOpt = None,
) -> None:
    """Run every check and experiment of a plan."""
    with _exit_codes():
        suite = run_plan(plan, _state(ctx).config, reporter=_state(ctx).reporter)
        _emit(suite, report)
        if not suite.passed:
            raise InvariantFailure(f"plan {plan} has failing reports")


# typer may ship its own copy of click; take the classes from the one it raises.
_ClickException: type[Exception] = getattr(
    sys.modules[typer.BadParameter.__module__], "ClickException"
)


def cli() -> None:
    """Console entry point; command-line usage errors exit with 1."""
    try:
        rv = app(standalone_mode=False)
    except typer.Abort:
        err_console.print("aborted")
        sys.exit(1)
    except _ClickException as e:
        e.show()  # type: ignore[attr-defined]
        sys.exit(1)
    sys.exit(rv if isinstance(rv, int) else 0)
