"""
d-sequences, finite local cohomology evidence, the Buchsbaum criteria and the
constant C = sum binom(n-1, i) * length(H^i_m(R)) reached through deep systems.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from algebra.ideal import IdealHandle, colon, colon_maximal_power, ideal_sum, maximal_ideal
from algebra.polynomial import Polynomial
from config import config
from constants import Properties
from exceptions import ArgumentError
from logging_config import get_logger
from models.verdict import DSequenceResult, Verdict
from services.ringkit import (
    ParameterSystem,
    RingPresentation,
    length,
    multiplicity,
    power_sop,
    sample_sop,
    sop_ideal,
)
from utils.seeds import derive_seed

logger = get_logger("parameters")

Sequenceish = Union[ParameterSystem, Sequence[Polynomial]]


def _elements(seq: Sequenceish) -> list[Polynomial]:
    return list(seq.elements) if isinstance(seq, ParameterSystem) else list(seq)


def _principal(R: RingPresentation, f: Polynomial) -> IdealHandle:
    return IdealHandle(R.ambient, [f])


def _first_outside(larger: IdealHandle, smaller: IdealHandle) -> Polynomial:
    for g in larger.gb:
        if not smaller.contains(g):
            return g
    raise ArgumentError("ideals are equal")


def is_d_sequence(R: RingPresentation, seq: Sequenceish) -> DSequenceResult:
    """(x_1..x_{i-1}) : x_i x_j == (x_1..x_{i-1}) : x_j for all i <= j, as ideals of R."""
    xs = _elements(seq)
    for i in range(1, len(xs) + 1):
        A = R.ideal(xs[: i - 1])
        for j in range(i, len(xs) + 1):
            left = colon(A, _principal(R, xs[i - 1] * xs[j - 1]))
            right = colon(A, _principal(R, xs[j - 1]))
            if not left.same_ideal(right):
                return DSequenceResult(
                    passed=False, sequence=xs, i=i, j=j, witness=_first_outside(left, right)
                )
    return DSequenceResult(passed=True, sequence=xs)


def _colon_comparison(
    R: RingPresentation, xs: list[Polynomial], other_side, prop: str, side: str, claim: str
) -> Verdict:
    for i in range(1, len(xs) + 1):
        A = R.ideal(xs[: i - 1])
        by_element = colon(A, _principal(R, xs[i - 1]))
        by_other = other_side(A)
        if not by_element.same_ideal(by_other):
            y = _first_outside(by_element, by_other)
            return Verdict.refuted(
                prop,
                f"colon by x_{i} differs from colon by {side}",
                witness={"i": i, "side": "x_i", "y": y, "sop": xs},
            )
    return Verdict.proven(prop, claim, witness={"sop": xs})


def colon_stabilization_check(R: RingPresentation, sop: ParameterSystem, N: int) -> Verdict:
    """(x_1..x_{i-1}) : x_i == (x_1..x_{i-1}) : m^N for every i."""
    if sop.deep_level < N:
        raise ArgumentError(f"system is certified in m^{sop.deep_level}, not m^{N}")
    return _colon_comparison(
        R,
        list(sop.elements),
        lambda A: colon_maximal_power(A, N),
        Properties.COLON_STABILIZATION,
        f"m^{N}",
        f"colons stabilize at m^{N} for this system",
    )


def buchsbaum_colon_check(R: RingPresentation, sop: ParameterSystem) -> Verdict:
    """(x_1..x_{i-1}) : x_i == (x_1..x_{i-1}) : m for every i."""
    m = maximal_ideal(R.ambient)
    return _colon_comparison(
        R,
        list(sop.elements),
        lambda A: colon(A, m),
        Properties.BUCHSBAUM_COLON,
        "m",
        "colon by x_i equals colon by m for this system",
    )


def flc_evidence(R: RingPresentation, samples: int, N: int, seed: int = 0) -> Verdict:
    """Deep systems in m^N must be d-sequences with stabilized colons when R has FLC."""
    seeds = []
    for k in range(samples):
        sop = sample_sop(R, seed, f"{Properties.FLC}:{N}", k)
        deep = power_sop(R, sop, N)
        seeds.append(derive_seed(seed, f"{Properties.FLC}:{N}", k))
        dseq = is_d_sequence(R, deep)
        if not dseq.passed:
            return _against_flc(N, k, seed, samples, {"check": Properties.D_SEQUENCE, **dseq.model_dump()})
        stab = colon_stabilization_check(R, deep, N)
        if stab.is_refuted:
            return _against_flc(N, k, seed, samples, {"check": Properties.COLON_STABILIZATION, **stab.witness})
    return Verdict.evidence(
        Properties.FLC,
        f"all sampled systems in m^{N} are d-sequences with stabilized colons",
        seed=seed,
        budget={"samples": samples, "N": N, "sample_seeds": seeds},
    )


def _against_flc(N: int, k: int, seed: int, samples: int, witness: dict) -> Verdict:
    logger.info("FLC check failed", extra={"data": {"N": N, "sample": k}})
    return Verdict.evidence(
        Properties.FLC,
        f"a system in m^{N} fails the FLC conditions; escalate N to test further",
        holds=False,
        seed=seed,
        witness={"N": N, "sample": k, **witness},
        budget={"samples": samples, "N": N},
    )


def delta(R: RingPresentation, sop: ParameterSystem) -> int:
    """length(R/q) - e(q; R)."""
    return length(R, sop_ideal(R, sop.elements)) - multiplicity(R, sop)


def invariant_constancy(R: RingPresentation, samples: int, seed: int = 0) -> tuple[Verdict, list[int]]:
    values: list[int] = []
    systems: list[ParameterSystem] = []
    for k in range(samples):
        sop = sample_sop(R, seed, Properties.DELTA_CONSTANCY, k)
        systems.append(sop)
        values.append(delta(R, sop))
        if values[-1] != values[0]:
            return (
                Verdict.refuted(
                    Properties.DELTA_CONSTANCY,
                    "length minus multiplicity differs between two systems of parameters",
                    seed=seed,
                    witness={
                        "sop_a": systems[0].strings(),
                        "delta_a": values[0],
                        "sop_b": sop.strings(),
                        "delta_b": values[-1],
                    },
                ),
                values,
            )
    return (
        Verdict.evidence(
            Properties.DELTA_CONSTANCY,
            f"length minus multiplicity is {values[0] if values else 0} on every sample",
            seed=seed,
            budget={"samples": samples, "delta": values[0] if values else 0},
        ),
        values,
    )


def buchsbaum_constant(
    R: RingPresentation, N_schedule: Optional[Sequence[int]] = None, seed: int = 0, systems: int = 3
) -> tuple[Optional[int], Verdict]:
    """Delta on deep systems until it agrees across two consecutive levels of the schedule."""
    N_schedule = list(N_schedule or config.DEEP_SCHEDULE)
    previous: Optional[int] = None
    observed: dict[int, list[int]] = {}
    for N in N_schedule:
        values = []
        for k in range(systems):
            sop = sample_sop(R, seed, Properties.BUCHSBAUM_CONSTANT, k)
            values.append(delta(R, power_sop(R, sop, N)))
        observed[N] = values
        level = values[0] if len(set(values)) == 1 else None
        if level is not None and level == previous:
            return level, Verdict.evidence(
                Properties.BUCHSBAUM_CONSTANT,
                f"C = {level}",
                seed=seed,
                budget={"schedule": N_schedule, "systems": systems, "observed": observed, "C": level},
            )
        previous = level
    return None, Verdict.inconclusive(
        Properties.BUCHSBAUM_CONSTANT,
        "deep-system values did not stabilize within the schedule",
        seed=seed,
        budget={"schedule": N_schedule, "systems": systems, "observed": observed},
    )


def buchsbaum_verdict(R: RingPresentation, budget: dict) -> Verdict:
    samples = budget["samples"]
    seed = budget["seed"]
    for k in range(samples):
        sop = sample_sop(R, seed, Properties.BUCHSBAUM, k)
        colon_check = buchsbaum_colon_check(R, sop)
        if colon_check.is_refuted:
            return _refute_buchsbaum(Properties.BUCHSBAUM_COLON, colon_check.witness, seed)
        dseq = is_d_sequence(R, sop)
        if not dseq.passed:
            return _refute_buchsbaum(Properties.D_SEQUENCE, dseq.model_dump(), seed)
    constancy, values = invariant_constancy(R, samples, seed)
    if constancy.is_refuted:
        return _refute_buchsbaum(Properties.DELTA_CONSTANCY, constancy.witness, seed)
    return Verdict.evidence(
        Properties.BUCHSBAUM,
        "colon, d-sequence and invariance channels found no witness",
        seed=seed,
        budget={
            "samples": samples,
            "channels": [Properties.BUCHSBAUM_COLON, Properties.D_SEQUENCE, Properties.DELTA_CONSTANCY],
            "delta": values[0] if values else 0,
            "deltas": values,
        },
    )


def _refute_buchsbaum(channel: str, witness: dict, seed: int) -> Verdict:
    return Verdict.refuted(
        Properties.BUCHSBAUM,
        f"{channel} channel found a witness",
        seed=seed,
        witness={"channel": channel, **witness},
    )


@dataclass
class UnmixedComparison:
    right: IdealHandle   # (x_1^k..x_i^k) : (x_1...x_i)^(k-1)
    left: IdealHandle    # (x_1..x_i) + sum_j (x_1..^x_j..x_i) : I
    agree: bool


def unmixed_denominator(R: RingPresentation, sop: ParameterSystem, i: int, k: int) -> UnmixedComparison:
    n = len(sop)
    if not 1 <= i <= n - 1:
        raise ArgumentError(f"index i={i} outside 1..{n - 1}")
    if k < 2:
        raise ArgumentError("k must be at least 2")
    xs = list(sop.elements)[:i]
    right = colon(R.ideal([x**k for x in xs]), _principal(R, math.prod(xs) ** (k - 1)))
    I = sop_ideal(R, sop.elements)
    left = ideal_sum(R.ideal(xs), *(colon(R.ideal(xs[:j] + xs[j + 1:]), I) for j in range(i)))
    return UnmixedComparison(right, left, right.same_ideal(left))
