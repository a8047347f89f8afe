"""Subcommands that read one ring file."""

from typing import Optional

import typer

from algebra.ideal import IdealHandle
from config import config
from constants import Properties
from models.report import Report, RingEcho
from models.verdict import Verdict
from services import classification
from services.classification import Pipeline
from services.frobenius import is_frobenius_closed, membership_verdict
from services.parameters import buchsbaum_verdict, is_d_sequence
from utils.poly_parser import parse_polynomial, parse_polynomial_list

from commands.options import Deep, Emax, Format, OutputFormat, Out, RingPath, Samples, Seed, Timings, build_budget
from commands.output import execute, load_ring

app = typer.Typer()


@app.command()
def classify(
    file: RingPath,
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    emax: Emax = config.EMAX,
    deep: Deep = None,
    format: Format = OutputFormat.text,
    out: Out = None,
    timings: Timings = False,
):
    """Every channel, the combined F-injectivity verdict and the contradiction section."""
    def body() -> Report:
        budget = build_budget(seed, samples, emax, deep)
        return classification.classify(load_ring(file), budget, timings)
    execute("classify", str(file), body, format, out)


@app.command()
def finjective(
    file: RingPath,
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    emax: Emax = config.EMAX,
    deep: Deep = None,
    format: Format = OutputFormat.text,
    out: Out = None,
    timings: Timings = False,
):
    """F-injectivity channels only."""
    def body() -> Report:
        budget = build_budget(seed, samples, emax, deep)
        return classification.finjective(load_ring(file), budget, timings)
    execute("finjective", str(file), body, format, out)


@app.command()
def closure(
    file: RingPath,
    ideal: str = typer.Option(..., "--ideal", help="Comma separated generators"),
    element: Optional[str] = typer.Option(None, "--element", help="Test this element for membership in the closure"),
    seed: Seed = 0,
    emax: Emax = config.EMAX,
    format: Format = OutputFormat.text,
    out: Out = None,
):
    """Frobenius closure stages of (ideal) + J, or membership of one element in it."""
    def body() -> Report:
        R = load_ring(file)
        handle = IdealHandle(R.ambient, parse_polynomial_list(ideal, R.ambient))
        params = {"e_max": emax, "ideal": ideal}
        if element is None:
            verdict = is_frobenius_closed(R, handle, emax)
        else:
            params["element"] = element
            verdict = membership_verdict(R, parse_polynomial(element, R.ambient), handle, emax)
        return _single(R, "closure", seed, params, verdict)
    execute("closure", str(file), body, format, out)


@app.command()
def dseq(
    file: RingPath,
    seq: str = typer.Option(..., "--seq", help="Comma separated sequence x_1..x_k"),
    seed: Seed = 0,
    format: Format = OutputFormat.text,
    out: Out = None,
):
    """Whether the sequence is a d-sequence in R."""
    def body() -> Report:
        R = load_ring(file)
        result = is_d_sequence(R, parse_polynomial_list(seq, R.ambient))
        if result.passed:
            verdict = Verdict.proven(
                Properties.D_SEQUENCE, "every colon pair agrees", witness={"sequence": result.sequence}
            )
        else:
            verdict = Verdict.refuted(
                Properties.D_SEQUENCE,
                f"(x_1..x_{result.i - 1}) : x_{result.i} x_{result.j} differs from the colon by x_{result.j}",
                witness={"i": result.i, "j": result.j, "y": result.witness, "sequence": result.sequence},
            )
        return _single(R, "dseq", seed, {"seq": seq}, verdict)
    execute("dseq", str(file), body, format, out)


@app.command()
def flc(
    file: RingPath,
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    deep: Deep = None,
    format: Format = OutputFormat.text,
    out: Out = None,
    timings: Timings = False,
):
    """Finite local cohomology evidence from deep systems of parameters."""
    def body() -> Report:
        pipeline = Pipeline(load_ring(file), build_budget(seed, samples, config.EMAX, deep), timings=timings)
        pipeline.run(Properties.FLC, pipeline.flc)
        return pipeline.report("flc", headline=Properties.FLC)
    execute("flc", str(file), body, format, out)


@app.command()
def buchsbaum(
    file: RingPath,
    seed: Seed = 0,
    samples: Samples = config.SAMPLES,
    deep: Deep = None,
    format: Format = OutputFormat.text,
    out: Out = None,
    timings: Timings = False,
):
    """Buchsbaum channels and the constant C from deep systems."""
    def body() -> Report:
        pipeline = Pipeline(load_ring(file), build_budget(seed, samples, config.EMAX, deep), timings=timings)
        verdict = pipeline.run(Properties.BUCHSBAUM, lambda: buchsbaum_verdict(pipeline.R, pipeline.budget))
        if verdict.supports:
            pipeline.run(Properties.BUCHSBAUM_CONSTANT, pipeline.constant)
        if pipeline.C is not None:
            pipeline.data["C"] = pipeline.C
        return pipeline.report("buchsbaum", headline=Properties.BUCHSBAUM)
    execute("buchsbaum", str(file), body, format, out)


def _single(R, command: str, seed: int, budget: dict, verdict: Verdict) -> Report:
    return Report(
        command=command,
        ring=RingEcho(**R.echo()),
        seed=seed,
        budget=budget,
        headline=verdict.property,
        entries=[verdict],
    )
