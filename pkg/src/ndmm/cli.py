"""Command-line interface.

Exit codes: 0 success, 1 evaluation/validation failure, 2 bad usage,
66 unreadable input file.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import plot as plot_mod
from . import problem_io
from .engine import (
    EvaluationConfig,
    InvalidProblemError,
    evaluate,
    k_sensitivity,
    validate_problem,
)
from .problem_io import ProblemFormatError

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOINPUT = 66

DEFAULT_PORT = 8787


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc.strerror}", err=True)
        sys.exit(EXIT_NOINPUT)


def _load_document(path: str) -> problem_io.ProblemDocument:
    text = _read_file(path)
    try:
        doc = problem_io.parse_problem(text)
    except (ProblemFormatError, InvalidProblemError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILURE)
    for warning in doc.warnings:
        click.echo(f"warning: {warning}", err=True)
    return doc


def _config(doc: problem_io.ProblemDocument, i_min, i_max, k) -> EvaluationConfig:
    defaults = doc.defaults or EvaluationConfig()
    try:
        return EvaluationConfig(
            i_min=defaults.i_min if i_min is None else i_min,
            i_max=defaults.i_max if i_max is None else i_max,
            k=defaults.k if k is None else k,
        )
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


@click.group()
def main() -> None:
    """Decision matrix scoring with indeterminacy-valued ratings."""


@main.command()
@click.argument("file", type=click.Path())
def validate(file: str) -> None:
    """Check a problem file; print one diagnostic per line."""
    text = _read_file(file)
    try:
        data = json.loads(text)
        doc = problem_io.document_from_dict(data)
    except (json.JSONDecodeError, ProblemFormatError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    for warning in doc.warnings:
        click.echo(f"warning: {warning}", err=True)
    diags = validate_problem(doc.problem)
    if diags:
        for diag in diags:
            click.echo(str(diag), err=True)
        sys.exit(EXIT_USAGE)
    click.echo(f"{file}: ok")


@main.command(name="evaluate")
@click.argument("file", type=click.Path())
@click.option("--i-min", type=float, default=None, help="Lower bound for I.")
@click.option("--i-max", type=float, default=None, help="Upper bound for I.")
@click.option("--k", type=float, default=None, help="Risk parameter.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def evaluate_cmd(file: str, i_min, i_max, k, fmt: str) -> None:
    """Score, de-neutrosophy and rank the alternatives in FILE."""
    doc = _load_document(file)
    cfg = _config(doc, i_min, i_max, k)
    try:
        result = evaluate(doc.problem, cfg)
    except (InvalidProblemError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILURE)

    if fmt == "json":
        click.echo(json.dumps(problem_io.result_to_dict(doc, result), indent=2))
        return

    ids = [a.id for a in doc.problem.alternatives]
    for j, alt in enumerate(doc.problem.alternatives):
        score = problem_io.format_rating(result.neutro_scores[j])
        interval = problem_io.format_interval(result.intervals[j].lo, result.intervals[j].hi)
        click.echo(f"{alt.id}: {score} {interval}")
    click.echo("ranking: " + " > ".join(ids[i] for i in result.ranking))
    click.echo(f"selected: {ids[result.selected_index]}")
    for c in result.contentions:
        click.echo(
            f"contention: {ids[c.crisp_index]} vs {ids[c.interval_index]} "
            f"(threshold {problem_io.format_number(c.threshold)}, "
            f"kCritical {problem_io.format_number(c.k_critical)})"
        )
    for warning in result.warnings:
        click.echo(f"warning: {warning}", err=True)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--i-min", type=float, default=None)
@click.option("--i-max", type=float, default=None)
def sensitivity(file: str, i_min, i_max) -> None:
    """Print the winner as a function of the risk parameter k."""
    doc = _load_document(file)
    cfg = _config(doc, i_min, i_max, None)
    steps = k_sensitivity(doc.problem, cfg.i_min, cfg.i_max)
    ids = [a.id for a in doc.problem.alternatives]
    for step in steps:
        prefix = "k > " if step.above else "k = "
        click.echo(f"{prefix}{problem_io.format_number(step.k)}: {ids[step.selected_index]}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--out", required=True, type=click.Path(), help="Output SVG path.")
@click.option("--i-min", type=float, default=None)
@click.option("--i-max", type=float, default=None)
@click.option("--mode", type=click.Choice(["bands", "lines"]), default="bands")
def plot(file: str, out: str, i_min, i_max, mode: str) -> None:
    """Render the de-neutrosophied scores to a standalone SVG file."""
    doc = _load_document(file)
    cfg = _config(doc, i_min, i_max, None)
    result = evaluate(doc.problem, cfg)
    svg = plot_mod.render_plot(doc.problem, result, cfg, mode=mode)
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(EXIT_FAILURE)
    click.echo(f"wrote {out}")


@main.command()
@click.option("--port", type=int, default=DEFAULT_PORT, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--data-dir",
    type=click.Path(),
    default=None,
    help="Directory for problem persistence (fallback: NDMM_DATA_DIR).",
)
@click.option(
    "--ui-dir",
    type=click.Path(),
    default=None,
    help="Directory of built web UI assets to serve at /.",
)
def serve(port: int, host: str, data_dir, ui_dir) -> None:
    """Run the HTTP service."""
    import socket

    import uvicorn

    from .service import create_app

    data_dir = data_dir or os.environ.get("NDMM_DATA_DIR")
    if data_dir:
        parent = os.path.dirname(os.path.abspath(data_dir)) or "."
        if not os.path.isdir(parent) or (
            os.path.exists(data_dir) and not os.access(data_dir, os.W_OK)
        ):
            click.echo(f"error: data dir {data_dir} is not writable", err=True)
            sys.exit(EXIT_FAILURE)
    if ui_dir is None and os.path.isdir("frontend/dist"):
        ui_dir = "frontend/dist"

    app = create_app(data_dir=data_dir, static_dir=ui_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((host, port))
    except OSError as exc:
        click.echo(f"error: cannot bind {host}:{port}: {exc.strerror}", err=True)
        sys.exit(EXIT_FAILURE)
    bound_host, bound_port = sock.getsockname()
    click.echo(f"listening on http://{bound_host}:{bound_port}")
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])


if __name__ == "__main__":
    main()
