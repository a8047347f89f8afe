"""
F-injectivity machinery.

For a standard system of parameters x_1..x_n and I = (x_1..x_n),
    H^i_m(R) = ((x_1..x_i) : I) / ((x_1..x_i) + sum_j (x_1..^x_j..x_i) : I),
and Frobenius acts by y -> y^p into the same presentation for x_1^p..x_n^p.
Both quotients have finite length when R has finite local cohomology; a basis
is found degree by degree with linear algebra over F_p.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from algebra.ideal import IdealHandle, colon, graded_piece_basis, intersect
from algebra.polynomial import Polynomial
from config import config
from constants import Properties
from exceptions import ArgumentError, CertificateError, ResourceExhausted
from logging_config import get_logger
from models.verdict import Verdict
from services.frobenius import bracket_power, is_frobenius_closed, level_allowed
from services.ringkit import (
    ParameterSystem,
    RingPresentation,
    is_cohen_macaulay,
    power_sop,
    sample_sop,
)
from utils.linalg import coordinates_in_rowspace, kernel_mod_p, rank_mod_p, rref_mod_p

logger = get_logger("finjective")

STANDARDNESS = "standardness of the system of parameters (Buchsbaum)"


@dataclass
class DegreePiece:
    degree: int
    monomials: list              # standard monomials of the denominator in this degree
    vectors: list[list[int]]     # basis of the piece, rref coordinates over `monomials`
    pivots: tuple[int, ...]
    lifts: list[Polynomial]


@dataclass
class LCPresentation:
    index: int
    sop: ParameterSystem
    numerator: IdealHandle
    denominator: IdealHandle
    pieces: dict[int, DegreePiece] = field(default_factory=dict)
    shift: int = 0
    scanned_degree: int = 0

    @property
    def basis(self) -> list[tuple[int, Polynomial]]:
        return [(d, y) for d in sorted(self.pieces) for y in self.pieces[d].lifts]

    @property
    def hilbert_profile(self) -> dict[int, int]:
        return {d: len(piece.lifts) for d, piece in sorted(self.pieces.items())}

    @property
    def length(self) -> int:
        return sum(self.hilbert_profile.values())

    def internal_profile(self) -> dict[int, int]:
        """Degrees of H^i_m(R) itself: the presentation shifted by the degrees of x_1..x_i."""
        return {d - self.shift: n for d, n in self.hilbert_profile.items()}

    def summary(self) -> dict:
        return {
            "index": self.index,
            "length": self.length,
            "profile": {str(d): n for d, n in self.hilbert_profile.items()},
            "internal_profile": {str(d): n for d, n in self.internal_profile().items()},
            "basis": [str(y) for _, y in self.basis],
            "scanned_degree": self.scanned_degree,
        }


def presentation_ideals(
    R: RingPresentation, elements: Sequence[Polynomial], i: int
) -> tuple[IdealHandle, IdealHandle]:
    """(numerator, denominator) lifted to S; for an artinian ring H^0 = R."""
    if not elements:
        return IdealHandle(R.ambient, [R.ambient.one()]), R.defining
    xs = list(elements)
    I = IdealHandle(R.ambient, xs)
    numerator = colon(R.ideal(xs[:i]), I)
    denominator = R.ideal(xs[:i])
    for j in range(i):
        denominator = denominator.extended(colon(R.ideal(xs[:j] + xs[j + 1:i]), I).generators)
    return numerator, denominator


def degree_piece(R: RingPresentation, numerator: IdealHandle, denominator: IdealHandle, d: int) -> DegreePiece:
    monomials = graded_piece_basis(denominator, d)
    if not monomials:
        return DegreePiece(d, [], [], (), [])
    images = [numerator.normal_form(R.ambient.monomial(b)) for b in monomials]
    rows_index = sorted({m for img in images for m in img.data}, key=R.ambient.sort_key, reverse=True)
    rows = [[img.data.get(m, 0) for img in images] for m in rows_index]
    kernel = kernel_mod_p(rows, len(monomials), R.p)
    vectors, pivots = rref_mod_p(kernel, len(monomials), R.p)
    lifts = [R.ambient.from_terms(zip(v, monomials)) for v in vectors]
    return DegreePiece(d, monomials, vectors, pivots, lifts)


def lc_presentation(
    R: RingPresentation, sop: ParameterSystem, i: int, degree_cap: Optional[int] = None
) -> LCPresentation:
    n = len(sop)
    if n != R.dim:
        raise ArgumentError("presentation needs a full system of parameters")
    if n == 0:
        if i != 0:
            raise ArgumentError("artinian rings only have H^0")
    elif not 0 <= i <= n - 1:
        raise ArgumentError(f"index i={i} outside 0..{n - 1}; top cohomology is not of finite length")
    degree_cap = degree_cap or config.DEGREE_CAP
    numerator, denominator = presentation_ideals(R, sop.elements, i)
    if not numerator.contains_ideal(denominator):
        raise CertificateError(f"denominator not contained in numerator at i={i}")

    gap = max(
        R.defining.max_generator_degree() + max(sop.degrees, default=0),
        max(R.weights),
    )
    start_zero_run = numerator.max_generator_degree()
    pres = LCPresentation(i, sop, numerator, denominator, shift=sum(sop.degrees[:i]))
    zeros = 0
    d = 0
    while True:
        if d > degree_cap:
            raise ResourceExhausted(f"presentation of H^{i} did not terminate by degree {degree_cap}")
        piece = degree_piece(R, numerator, denominator, d)
        if piece.lifts:
            pres.pieces[d] = piece
            zeros = 0
        elif d > start_zero_run:
            zeros += 1
        if zeros >= gap:
            break
        d += 1
    pres.scanned_degree = d
    logger.debug(
        "Presentation computed",
        extra={"data": {"ring": R.name, "i": i, "length": pres.length, "scanned": d}},
    )
    return pres


@dataclass
class FrobeniusMatrix:
    p: int
    index: int
    source: list[tuple[int, Polynomial]]
    target: list[tuple[int, Polynomial]]
    entries: list[list[int]]     # rows: target basis, columns: source basis

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target), len(self.source)


def frobenius_action_matrix(R: RingPresentation, pres: LCPresentation) -> FrobeniusMatrix:
    p = R.p
    source = pres.basis
    if not source:
        return FrobeniusMatrix(p, pres.index, [], [], [])
    powered = [x.frobenius_power(p) for x in pres.sop.elements]
    numerator, denominator = presentation_ideals(R, powered, pres.index)
    for g in pres.denominator.generators:
        if not denominator.contains(g.frobenius_power(p)):
            raise CertificateError(f"Frobenius image of denominator generator {g} escapes the target denominator")

    targets: dict[int, DegreePiece] = {}
    for d in sorted({d for d, _ in source}):
        targets[p * d] = degree_piece(R, numerator, denominator, p * d)
    target = [(d, y) for d in sorted(targets) for y in targets[d].lifts]
    offsets = {}
    running = 0
    for d in sorted(targets):
        offsets[d] = running
        running += len(targets[d].lifts)

    entries = [[0] * len(source) for _ in target]
    for col, (d, y) in enumerate(source):
        image = y.frobenius_power(p)
        if not numerator.contains(image):
            raise CertificateError(f"y^p lies outside the target numerator for y = {y}")
        piece = targets[p * d]
        reduced = denominator.normal_form(image)
        coords = [reduced.data.get(m, 0) for m in piece.monomials]
        if not set(reduced.data) <= set(piece.monomials):
            raise CertificateError(f"normal form of y^p for y = {y} is not homogeneous of degree {p * d}")
        if piece.vectors:
            solved = coordinates_in_rowspace(piece.vectors, piece.pivots, coords, p)
        else:
            solved = None if any(coords) else []
        if solved is None:
            raise CertificateError(f"y^p does not resolve in the target basis for y = {y}")
        for k, a in enumerate(solved):
            entries[offsets[p * d] + k][col] = a
    return FrobeniusMatrix(p, pres.index, source, target, entries)


def f_injective_on_Hi(matrix: FrobeniusMatrix) -> Verdict:
    """Injective iff the matrix has full column rank over F_p."""
    rows, cols = matrix.shape
    if cols == 0:
        return Verdict.proven(
            Properties.F_INJECTIVE_MATRIX,
            f"H^{matrix.index} vanishes",
            witness={"index": matrix.index, "rank": 0},
            conditional_on=STANDARDNESS,
        )
    rank = rank_mod_p(matrix.entries, cols, matrix.p)
    if rank == cols:
        return Verdict.proven(
            Properties.F_INJECTIVE_MATRIX,
            f"Frobenius is injective on H^{matrix.index}",
            witness={"index": matrix.index, "rank": rank, "entries": matrix.entries},
            conditional_on=STANDARDNESS,
        )
    vector = kernel_mod_p(matrix.entries, cols, matrix.p)[0]
    cls = matrix.source[0][1].ring.zero()
    for c, (_, y) in zip(vector, matrix.source):
        cls = cls + y.scale(c)
    return Verdict.refuted(
        Properties.F_INJECTIVE_MATRIX,
        f"Frobenius kills a nonzero class of H^{matrix.index}",
        witness={"index": matrix.index, "class": cls, "kernel_vector": vector, "rank": rank},
        conditional_on=STANDARDNESS,
    )


def sop_ideal_handle(R: RingPresentation, sop: ParameterSystem) -> IdealHandle:
    return IdealHandle(R.ambient, list(sop.elements))


def sop_closure_sampling(
    R: RingPresentation, budget: dict, e_max: Optional[int] = None, seed: int = 0
) -> Verdict:
    """Closure of sampled parameter ideals; odd samples are squared to reach deeper systems."""
    e_max = config.EMAX if e_max is None else e_max
    samples = budget["samples"]
    effective = e_max
    for k in range(samples):
        sop = sample_sop(R, seed, Properties.SOP_CLOSURE, k)
        if k % 2 == 1 and len(sop):
            sop = power_sop(R, sop, 2)
        verdict = is_frobenius_closed(R, sop_ideal_handle(R, sop), e_max)
        if verdict.is_refuted:
            return Verdict.refuted(
                Properties.SOP_CLOSURE,
                "a parameter ideal is not Frobenius closed",
                seed=seed,
                witness={"sample": k, "sop": sop.strings(), **verdict.witness},
                conditional_on="finite local cohomology",
            )
        effective = min(effective, verdict.budget["effective_e_max"])
    return Verdict.evidence(
        Properties.SOP_CLOSURE,
        "every sampled parameter ideal passed the closure stages",
        seed=seed,
        budget={"samples": samples, "e_max": e_max, "effective_e_max": effective},
    )


def cm_finjective_test(
    R: RingPresentation, sop: ParameterSystem, e_max: Optional[int] = None, cm: Optional[Verdict] = None
) -> Verdict:
    """For Cohen-Macaulay R, F-injective iff one parameter ideal is Frobenius closed."""
    cm = cm or is_cohen_macaulay(R, sop)
    if not cm.is_proven:
        raise ArgumentError("ring is not certified Cohen-Macaulay on this system")
    verdict = is_frobenius_closed(R, sop_ideal_handle(R, sop), e_max)
    if verdict.is_refuted:
        return Verdict.refuted(
            Properties.CM_F_INJECTIVE,
            "Cohen-Macaulay and a parameter ideal is not Frobenius closed: not F-injective",
            witness={"sop": sop.strings(), **verdict.witness},
        )
    return Verdict.evidence(
        Properties.CM_F_INJECTIVE,
        "the parameter ideal passed every closure stage",
        budget={"sop": sop.strings(), **verdict.budget},
    )


def partial_sop_closure_check(
    R: RingPresentation, sop: ParameterSystem, t: int, e_max: Optional[int] = None, s_max: int = 4
) -> Verdict:
    """Closure of (x_1..x_t), plus the intersection of (x_1..x_t, x_{t+1}^s..x_n^s) over s <= s_max.

    The intersection agrees with (x_1..x_t) + J in every degree below s * min deg x_j (j > t);
    that window is verified through Hilbert function counts.
    """
    n = len(sop)
    if not 1 <= t <= n:
        raise ArgumentError(f"t={t} outside 1..{n}")
    xs = list(sop.elements)
    partial = IdealHandle(R.ambient, xs[:t])
    closed = is_frobenius_closed(R, partial, e_max)

    target = R.ideal(xs[:t])
    target_top = max((g.degree() for g in target.gb), default=0)
    rest_degree = min(sop.degrees[t:], default=None)
    running: Optional[IdealHandle] = None
    windows = []
    stable_from = None
    for s in range(1, s_max + 1):
        stage = R.ideal(xs[:t] + [x**s for x in xs[t:]])
        running = stage if running is None else intersect(running, stage)
        if not running.contains_ideal(target):
            raise CertificateError(f"intersection at s={s} does not contain (x_1..x_{t})")
        if rest_degree is None:
            if not running.same_ideal(target):
                raise CertificateError("intersection differs from the full parameter ideal")
            window = None
        else:
            window = s * rest_degree - 1
            for d in range(window + 1):
                if len(graded_piece_basis(running, d)) != len(graded_piece_basis(target, d)):
                    raise CertificateError(f"intersection at s={s} differs in degree {d}")
        windows.append(window)
        if stable_from is None and (window is None or window >= target_top):
            stable_from = s

    payload = {"t": t, "s_max": s_max, "agreement_windows": windows, "stable_from": stable_from}
    if closed.is_refuted:
        return Verdict.refuted(
            Properties.PARTIAL_SOP_CLOSURE,
            f"(x_1..x_{t}) is not Frobenius closed",
            witness={**closed.witness, **payload},
        )
    return Verdict.evidence(
        Properties.PARTIAL_SOP_CLOSURE,
        f"(x_1..x_{t}) passed the closure stages",
        budget={**closed.budget, **payload},
    )


def top_cohomology_evidence(R: RingPresentation, sop: ParameterSystem, e_max: Optional[int] = None) -> Verdict:
    """Closure of the bracket powers (x_1^q..x_n^q), q = p^e, e = 0..e_max."""
    e_max = config.EMAX if e_max is None else e_max
    ideal = sop_ideal_handle(R, sop)
    maxdeg = max(sop.degrees, default=0)
    checked = []
    for e in range(e_max + 1):
        q = R.p**e
        if e > 0 and not level_allowed(q, maxdeg):
            break
        verdict = is_frobenius_closed(R, bracket_power(ideal, q), e_max)
        if verdict.is_refuted:
            return Verdict.refuted(
                Properties.TOP_COHOMOLOGY,
                f"bracket power at q={q} is not Frobenius closed",
                witness={"q": q, "sop": sop.strings(), **verdict.witness},
            )
        checked.append(q)
    return Verdict.evidence(
        Properties.TOP_COHOMOLOGY,
        "bracket powers of the parameter ideal passed the closure stages",
        budget={"q_checked": checked, "e_max": e_max},
    )


def graded_window(presentations: Sequence[LCPresentation]) -> Verdict:
    """Whether every presented H^i (i < n) sits in a single common internal degree."""
    degrees = sorted({d for pres in presentations for d in pres.internal_profile()})
    profiles = {str(pres.index): {str(d): k for d, k in pres.internal_profile().items()} for pres in presentations}
    if len(degrees) <= 1:
        return Verdict.evidence(
            Properties.GRADED_WINDOW,
            "local cohomology below the top is concentrated in one degree" if degrees else "local cohomology below the top vanishes",
            budget={"degrees": degrees, "profiles": profiles},
        )
    return Verdict.evidence(
        Properties.GRADED_WINDOW,
        "local cohomology below the top spreads over several degrees",
        holds=False,
        budget={"degrees": degrees, "profiles": profiles},
    )
