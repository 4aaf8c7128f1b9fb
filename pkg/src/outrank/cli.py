"""Command-line front door: ingest surveys, rank matrices, sweep thresholds,
export graphs, and launch the HTTP service.

Exit codes: 0 success, 1 data validation failure, 2 usage error. All
diagnostics go to stderr; results go to stdout or ``--out``. Output is
byte-deterministic for fixed inputs.
"""

import json
import sys
from pathlib import Path

import click

from .analysis import build_report
from .engine import InvalidMatrixError
from .formats import (
    CriteriaConfigError,
    MatrixFormatError,
    apply_criteria_config,
    d_star_from_json,
    parse_criteria_config,
    read_matrix_csv,
    report_to_dot,
    report_to_json,
    report_to_text,
    sweep_to_json,
    sweep_to_text,
    write_matrix_csv,
)
from .model import ThresholdConfig, validate_matrix, validate_thresholds
from .sensitivity import threshold_sweep, weight_perturbation
from .survey import (
    EmptyStoreError,
    MalformedHeaderError,
    SurveyValidationError,
    aggregate_means,
    parse_survey_csv,
)

DATA_ERROR = 1


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(DATA_ERROR)


def _write_output(text: str, out: "str | None") -> None:
    if out is None or out == "-":
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _parse_d_star_flag(value: str) -> float:
    try:
        d_star = d_star_from_json(value if value in ("inf", "infinity", "unbounded") else float(value))
    except ValueError:
        raise click.BadParameter("must be a number >= 0 or 'inf'")
    problems = validate_thresholds(0.0, d_star)
    if problems:
        raise click.BadParameter(problems[0].message)
    return d_star


def _load_matrix(matrix_path: str, criteria_path: "str | None"):
    try:
        matrix = read_matrix_csv(Path(matrix_path).read_bytes())
        if criteria_path is not None:
            specs = parse_criteria_config(Path(criteria_path).read_bytes())
            matrix = apply_criteria_config(matrix, specs)
    except (MatrixFormatError, CriteriaConfigError) as exc:
        _fail(str(exc))
    result = validate_matrix(matrix)
    if not result.ok:
        for violation in result.violations:
            click.echo(f"error: {violation.path}: {violation.message}", err=True)
        sys.exit(DATA_ERROR)
    return matrix


def _c_star_option(f):
    return click.option(
        "--c-star",
        type=click.FloatRange(0.0, 1.0),
        default=0.75,
        show_default=True,
        help="Concordance threshold (inclusive).",
    )(f)


def _d_star_option(f):
    return click.option(
        "--d-star",
        default="inf",
        show_default=True,
        help="Discordance threshold; 'inf' for unbounded.",
    )(f)


def _shared_rank_options(f):
    f = click.option("--out", default=None, help="Output file (default: stdout).")(f)
    f = click.option(
        "--criteria",
        "criteria_path",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="Criteria config JSON (directions, weights, vetoes).",
    )(f)
    f = _d_star_option(f)
    f = _c_star_option(f)
    f = click.option(
        "--matrix",
        "matrix_path",
        type=click.Path(exists=True, dir_okay=False),
        required=True,
        help="Decision-matrix CSV.",
    )(f)
    return f


@click.group()
def main():
    """Consensus rankings of alternatives under weighted criteria,
    via concordance/discordance outranking analysis."""


@main.command()
@_shared_rank_options
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "dot"]),
    default="text",
    show_default=True,
    help="Report format.",
)
def rank(matrix_path, c_star, d_star, criteria_path, out, fmt):
    """Rank a decision matrix: outranking graph, kernel, levels, tables."""
    matrix = _load_matrix(matrix_path, criteria_path)
    thresholds = ThresholdConfig(c_star=c_star, d_star=_parse_d_star_flag(d_star))
    try:
        report = build_report(matrix, thresholds=thresholds)
    except InvalidMatrixError as exc:
        _fail(str(exc))
    renderers = {"text": report_to_text, "json": report_to_json, "dot": report_to_dot}
    _write_output(renderers[fmt](report), out)


@main.command("export-dot")
@_shared_rank_options
def export_dot(matrix_path, c_star, d_star, criteria_path, out):
    """Export the outranking digraph as Graphviz DOT."""
    matrix = _load_matrix(matrix_path, criteria_path)
    thresholds = ThresholdConfig(c_star=c_star, d_star=_parse_d_star_flag(d_star))
    try:
        report = build_report(matrix, thresholds=thresholds)
    except InvalidMatrixError as exc:
        _fail(str(exc))
    _write_output(report_to_dot(report), out)


@main.command()
@click.option(
    "--matrix",
    "matrix_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Decision-matrix CSV.",
)
@_d_star_option
@click.option(
    "--criteria",
    "criteria_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Criteria config JSON.",
)
@click.option(
    "--grid",
    default=None,
    help="Comma-separated thresholds to evaluate (default: exact mode).",
)
@click.option("--perturb-delta", type=click.FloatRange(min=0.0), default=None,
              help="Also sample weight perturbations of this magnitude.")
@click.option("--perturb-samples", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--c-star", type=click.FloatRange(0.0, 1.0), default=0.75, show_default=True,
              help="Threshold used for the perturbation baseline.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--out", default=None, help="Output file (default: stdout).")
def sweep(matrix_path, d_star, criteria_path, grid, perturb_delta, perturb_samples, seed,
          c_star, fmt, out):
    """Sweep the concordance threshold; optionally probe weight stability."""
    matrix = _load_matrix(matrix_path, criteria_path)
    d_star_value = _parse_d_star_flag(d_star)
    grid_values = None
    if grid is not None:
        try:
            grid_values = [float(v) for v in grid.split(",") if v.strip()]
        except ValueError:
            raise click.BadParameter("grid must be comma-separated numbers", param_hint="--grid")
        if not grid_values:
            raise click.BadParameter("grid names no thresholds", param_hint="--grid")
    try:
        result = threshold_sweep(matrix, d_star=d_star_value, grid=grid_values)
    except (InvalidMatrixError, ValueError) as exc:
        _fail(str(exc))

    text = sweep_to_json(result) if fmt == "json" else sweep_to_text(result)
    if perturb_delta is not None:
        summary = weight_perturbation(
            matrix,
            thresholds=ThresholdConfig(c_star=c_star, d_star=d_star_value),
            delta=perturb_delta,
            samples=perturb_samples,
            seed=seed,
        )
        if fmt == "json":
            doc = {
                "sweep": json.loads(text),
                "perturbation": {
                    "delta": summary.delta,
                    "samples": summary.samples,
                    "seed": summary.seed,
                    "kernel_preserved_fraction": summary.kernel_preserved_fraction,
                    "levels_preserved_fraction": summary.levels_preserved_fraction,
                    "baseline_kernel": sorted(summary.baseline_kernel),
                },
            }
            text = json.dumps(doc, indent=2) + "\n"
        else:
            text += (
                "\nWeight perturbation "
                f"(delta={summary.delta!r}, samples={summary.samples}, seed={summary.seed})\n"
                f"  kernel preserved: {summary.kernel_preserved_fraction:.3f}\n"
                f"  levels preserved: {summary.levels_preserved_fraction:.3f}\n"
            )
    _write_output(text, out)


@main.command()
@click.option(
    "--survey",
    "survey_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Survey responses CSV.",
)
@click.option("--out", default=None, help="Matrix CSV output (default: stdout).")
@click.option("--strict", is_flag=True, help="Abort on the first malformed row.")
def ingest(survey_path, out, strict):
    """Aggregate Likert survey responses into a decision-matrix CSV."""
    try:
        dataset, violations = parse_survey_csv(Path(survey_path).read_bytes(), strict=strict)
    except (MalformedHeaderError, SurveyValidationError) as exc:
        _fail(str(exc))
    for violation in violations:
        click.echo(f"warning: {violation.path}: {violation.message}", err=True)
    try:
        matrix = aggregate_means(dataset)
    except EmptyStoreError as exc:
        _fail(str(exc))
    result = validate_matrix(matrix)
    if not result.ok:
        for violation in result.violations:
            click.echo(f"error: {violation.path}: {violation.message}", err=True)
        sys.exit(DATA_ERROR)
    _write_output(write_matrix_csv(matrix), out)


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--static",
    "static_dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory of built UI assets to serve at /.",
)
def serve(port, host, static_dir):
    """Run the JSON analysis service (and the explorer UI, if built)."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(static_dir=static_dir), host=host, port=port)


if __name__ == "__main__":
    main()
