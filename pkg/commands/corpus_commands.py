"""Subcommands over many rings: the counterexample search and directory reports."""

from pathlib import Path
from typing import Annotated, Optional

import typer

from config import config
from constants import Families
from exceptions import ArgumentError
from models.fixture import RingGenerator
from models.report import Report
from services.classification import classify
from services.search import search as run_search
from utils.fanout import run_parallel
from utils.ring_file import load_ring_file

from commands.options import Deep, Emax, Format, OutputFormat, Out, Samples, Seed, Timings, build_budget
from commands.output import execute

app = typer.Typer()


@app.command()
def search(
    family: str = typer.Option(..., "--family", help=f"One of {', '.join(Families.ALL)}"),
    count: int = typer.Option(10, "--count", min=1),
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    emax: Emax = config.EMAX,
    deep: Deep = None,
    max_vars: int = typer.Option(4, "--max-vars", min=2, max=5),
    max_degree: int = typer.Option(3, "--max-degree", min=2, max=4),
    out: Optional[Path] = typer.Option(
        None, "--out", "--candidates", help="Directory for one .ring and one .json per candidate; the summary goes to stdout"
    ),
    workers: int = typer.Option(config.WORKERS, "--workers", min=1),
    format: Format = OutputFormat.text,
    timings: Timings = False,
):
    """Classify generated rings and list counterexample candidates (never verdicts)."""
    def body() -> Report:
        if family not in Families.ALL:
            raise ArgumentError(f"unknown family {family!r}; expected one of {list(Families.ALL)}")
        gen = RingGenerator(family=family, max_vars=max_vars, max_degree=max_degree, seed=seed)
        budget = build_budget(seed, samples, emax, deep)
        return run_search(gen, count, budget, out, workers, timings)
    execute("search", family, body, format, None)


@app.command()
def report(
    directory: Annotated[Path, typer.Argument(help="Directory of .ring files")],
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    emax: Emax = config.EMAX,
    deep: Deep = None,
    workers: int = typer.Option(config.WORKERS, "--workers", min=1),
    format: Format = OutputFormat.text,
    out: Out = None,
    timings: Timings = False,
):
    """Classify every ring file in a directory; one aggregate report."""
    def body() -> Report:
        if not directory.is_dir():
            raise ArgumentError(f"not a directory: {directory}")
        paths = sorted(directory.glob("*.ring"))
        if not paths:
            raise ArgumentError(f"no .ring files in {directory}")
        rings = [load_ring_file(path) for path in paths]
        budget = build_budget(seed, samples, emax, deep)
        children = run_parallel(lambda R: classify(R, budget, timings), rings, workers)
        return Report(
            command="report",
            seed=seed,
            budget=budget,
            rings=children,
            data={"directory": str(directory), "files": [path.name for path in paths]},
        )
    execute("report", str(directory), body, format, out)
