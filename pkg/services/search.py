"""
Counterexample search over generated rings.

A ring becomes a candidate when finite local cohomology is not supported, some
parameter ideal is not Frobenius closed, and no channel refutes F-injectivity
directly. Candidates are never verdicts.
"""

from pathlib import Path
from typing import Optional

from config import config
from constants import Properties, VerdictKinds
from defaults import DEFAULT_BUDGET
from logging_config import get_logger
from models.fixture import RingGenerator
from models.report import Candidate, Contradiction, Report, RingEcho
from services.classification import Pipeline
from services.corpus import generate
from services.ringkit import RingPresentation
from utils.fanout import run_parallel
from utils.ring_file import format_ring_file

logger = get_logger("search")


def candidate_reasons(report: Report) -> Optional[list[str]]:
    """Reasons a classified ring is worth a look, or None."""
    flc = report.entry(Properties.FLC)
    if flc is None or flc.supports or flc.kind == VerdictKinds.INCONCLUSIVE:
        return None
    reduced = report.entry(Properties.REDUCED)
    if reduced is not None and reduced.is_refuted:
        return None
    if any(v.property == Properties.F_INJECTIVE_MATRIX and v.is_refuted for v in report.entries):
        return None
    not_closed = [
        prop for prop in (Properties.SOP_CLOSURE, Properties.TOP_COHOMOLOGY)
        if report.entry(prop) is not None and report.entry(prop).is_refuted
    ]
    if not not_closed:
        return None
    return [f"{Properties.FLC} not supported"] + [f"{prop} refuted" for prop in not_closed]


def reproduction_command(path: Path, budget: dict) -> str:
    command = f"fsing classify {path} --seed {budget['seed']} --samples {budget['samples']} --emax {budget['e_max']}"
    schedule = list(budget.get("deep_schedule") or config.DEEP_SCHEDULE)
    if schedule != list(config.DEEP_SCHEDULE):
        command += " --deep " + ",".join(str(N) for N in schedule)
    return command + " --format json"


def search(
    gen: RingGenerator,
    count: int,
    budget: Optional[dict] = None,
    out_dir: Optional[Path] = None,
    workers: Optional[int] = None,
    timings: bool = False,
) -> Report:
    budget = {**DEFAULT_BUDGET, **(budget or {})}
    rings = list(generate(gen, count))

    def classify_one(R: RingPresentation) -> Report:
        return Pipeline(R, budget, full=False, timings=timings).execute().report("search")

    reports = run_parallel(classify_one, rings, workers)
    result = Report(
        command="search",
        seed=budget["seed"],
        budget=budget,
        data={"family": gen.family, "generator_seed": gen.seed, "count": count, "rings": [R.name for R in rings]},
    )
    for R, report in zip(rings, reports):
        for alert in report.contradictions:
            result.contradictions.append(
                Contradiction(rule=alert.rule, properties=alert.properties, detail=f"{R.name}: {alert.detail}")
            )
        reasons = candidate_reasons(report)
        if reasons is None:
            continue
        ring_path = Path(out_dir or ".") / f"{R.name}.ring"
        result.candidates.append(
            Candidate(
                name=R.name,
                ring=RingEcho(**R.echo()),
                reasons=reasons,
                command=reproduction_command(ring_path, budget),
            )
        )
        logger.info("Candidate found", extra={"data": {"ring": R.name, "reasons": reasons}})
        if out_dir is not None:
            write_candidate(Path(out_dir), R, report)
    return result


def write_candidate(out_dir: Path, R: RingPresentation, report: Report):
    out_dir.mkdir(parents=True, exist_ok=True)
    command = reproduction_command(out_dir / f"{R.name}.ring", report.budget)
    (out_dir / f"{R.name}.ring").write_text(format_ring_file(R, comment=command), encoding="utf-8")
    (out_dir / f"{R.name}.json").write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
