"""Shared command line options and the per-run budget they build."""

from enum import Enum
from pathlib import Path
from typing import Annotated, Optional

import typer

from config import config
from defaults import DEFAULT_BUDGET
from exceptions import ArgumentError


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


RingPath = Annotated[Path, typer.Argument(help="Ring file (p / vars / weights / gens lines)")]
Seed = Annotated[int, typer.Option("--seed", min=0, max=2**64 - 1, help="Root seed; per-sample seeds are split from it")]
Samples = Annotated[int, typer.Option("--samples", min=1, help="Sampled systems of parameters per channel")]
Emax = Annotated[int, typer.Option("--emax", min=0, help="Highest Frobenius level e checked")]
Deep = Annotated[Optional[str], typer.Option("--deep", help="Deep schedule N, or a comma separated list (default 2,3,4)")]
Format = Annotated[OutputFormat, typer.Option("--format", case_sensitive=False)]
Out = Annotated[Optional[Path], typer.Option("--out", help="Write the report here instead of stdout")]
Timings = Annotated[bool, typer.Option("--timings", help="Record wall time per entry (reports stop being byte-stable)")]


def parse_schedule(raw: Optional[str]) -> list[int]:
    if raw is None:
        return list(config.DEEP_SCHEDULE)
    try:
        levels = [int(part) for part in raw.replace(" ", "").split(",") if part]
    except ValueError:
        raise ArgumentError(f"--deep expects integers, got {raw!r}")
    if not levels or any(N < 1 for N in levels):
        raise ArgumentError(f"--deep levels must be positive, got {raw!r}")
    return levels


def build_budget(seed: int, samples: int, emax: int, deep: Optional[str]) -> dict:
    return {
        **DEFAULT_BUDGET,
        "seed": seed,
        "samples": samples,
        "e_max": emax,
        "deep_schedule": parse_schedule(deep),
    }
