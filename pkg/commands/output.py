"""Report emission (JSON or rich text) and the exit code contract."""

from pathlib import Path
from typing import Callable, Optional

import typer
from rich.console import Console
from rich.table import Table

from constants import ExitCodes
from exceptions import ArgumentError
from middleware import run_lifecycle
from models.report import Report
from models.verdict import Verdict, to_jsonable
from services.ringkit import RingPresentation
from utils.ring_file import load_ring_file

from commands.options import OutputFormat

KIND_STYLES = {"proven": "green", "refuted": "red", "evidence": "cyan", "inconclusive": "yellow"}


def load_ring(path: Path) -> RingPresentation:
    if not path.is_file():
        raise ArgumentError(f"ring file not found: {path}")
    return load_ring_file(path)


def exit_code_for(report: Report) -> int:
    if report.all_contradictions():
        return ExitCodes.CONTRADICTION
    if report.any_refuted_headline():
        return ExitCodes.REFUTED
    return ExitCodes.OK


def _detail(verdict: Verdict) -> str:
    if verdict.reason:
        return verdict.reason
    payload = verdict.witness if verdict.witness else verdict.budget
    if not payload:
        return ""
    shown = {k: v for k, v in to_jsonable(payload).items() if k not in ("entries", "observed", "sample_seeds")}
    return ", ".join(f"{k}={v}" for k, v in shown.items())


def _verdict_table(report: Report) -> Table:
    table = Table(title=f"{report.command}: {report.ring.name if report.ring else ''}", show_lines=False)
    table.add_column("property")
    table.add_column("kind")
    table.add_column("claim")
    table.add_column("witness / budget", overflow="fold")
    for verdict in report.entries:
        style = KIND_STYLES.get(verdict.kind, "")
        kind = verdict.kind if verdict.holds is not False or verdict.kind != "evidence" else "evidence (against)"
        claim = verdict.claim + (f" [conditional on {verdict.conditional_on}]" if verdict.conditional_on else "")
        table.add_row(verdict.property, f"[{style}]{kind}[/{style}]", claim, _detail(verdict))
    return table


def _summary_table(report: Report) -> Table:
    table = Table(title=f"{report.command}: {len(report.rings)} rings")
    for column in ("ring", "headline", "contradictions"):
        table.add_column(column)
    for child in report.rings:
        headline = child.headline_verdict()
        table.add_row(
            child.ring.name if child.ring else "-",
            headline.kind if headline else "-",
            str(len(child.contradictions)),
        )
    return table


def render_text(report: Report, console: Console):
    if report.ring is not None:
        ring = report.ring
        console.print(
            f"[bold]{ring.name}[/bold]  F_{ring.p}[{', '.join(ring.variables)}] / ({', '.join(ring.generators)})"
            f"  weights={ring.weights}  dim={ring.dim}  seed={report.seed}"
        )
    if report.entries:
        console.print(_verdict_table(report))
    if report.rings:
        console.print(_summary_table(report))
    for candidate in report.candidates:
        console.print(f"[magenta]candidate[/magenta] {candidate.name}: {', '.join(candidate.reasons)}")
        console.print(f"  reproduce: {candidate.command}")
    contradictions = report.all_contradictions()
    if contradictions:
        console.print("[bold red]CONTRADICTIONS[/bold red]")
        for alert in contradictions:
            console.print(f"  {alert.rule}: {alert.detail} ({', '.join(alert.properties)})")
    else:
        console.print("no contradictions")


def emit(report: Report, fmt: OutputFormat, out: Optional[Path]):
    if fmt == OutputFormat.json:
        text = report.model_dump_json(indent=2) + "\n"
        if out is None:
            typer.echo(text, nl=False)
        else:
            out.write_text(text, encoding="utf-8")
        return
    if out is None:
        render_text(report, Console(width=140))
        return
    with out.open("w", encoding="utf-8") as handle:
        render_text(report, Console(file=handle, width=140, no_color=True))


def execute(command: str, target: str, body: Callable[[], Report], fmt: OutputFormat, out: Optional[Path]):
    """Run `body` inside the lifecycle, print the report and leave with the contract's exit code."""
    with run_lifecycle(command, target) as outcome:
        report = body()
        emit(report, fmt, out)
        outcome.exit_code = exit_code_for(report)
    if outcome.error is not None:
        typer.echo(f"error: {outcome.error}", err=True)
    raise typer.Exit(outcome.exit_code)
