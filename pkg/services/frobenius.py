"""
Bracket powers, Frobenius roots, Frobenius closure and Fedder's F-purity test.

A closure stage at level e is the exact preimage
    I_e = { y in S : y^q in I^[q] + J },  q = p^e,
computed degree by degree: on the standard monomials b of I + J in degree d
the map c -> NF(sum c_b b^q) is F_p-linear (c^q = c), so the new elements of
the stage in degree d form the kernel of a matrix over F_p.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from algebra.ideal import (
    IdealHandle,
    colon,
    graded_piece_basis,
    krull_dimension,
    maximal_ideal,
    standard_monomials,
)
from algebra.polynomial import Polynomial
from config import config
from constants import Properties
from exceptions import CertificateError
from logging_config import get_logger
from models.verdict import Verdict
from services.ringkit import RingPresentation
from utils.linalg import kernel_mod_p

logger = get_logger("frobenius")


def bracket_power(ideal: IdealHandle, q: int) -> IdealHandle:
    """I^[q], generated by the q-th powers of the generators of I."""
    ideal.ring.field.require_power(q)
    return IdealHandle(ideal.ring, [g.frobenius_power(q) for g in ideal.generators])


def frobenius_root(ideal: IdealHandle, q: int) -> IdealHandle:
    """Smallest L with L^[q] containing K, by splitting generators over the basis x^a, 0 <= a_i < q."""
    ring = ideal.ring
    ring.field.require_power(q)
    gens = []
    for g in ideal.generators:
        pieces: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        for m, c in g.data.items():
            residue = tuple(a % q for a in m)
            pieces.setdefault(residue, {})[tuple(a // q for a in m)] = c
        for residue in sorted(pieces):
            gens.append(Polynomial._trusted(ring, pieces[residue]))
    return IdealHandle(ring, gens)


def level_allowed(q: int, max_degree: int) -> bool:
    return q * max(max_degree, 1) <= config.FROBENIUS_MAX_DEGREE


@dataclass
class MembershipOutcome:
    in_closure: bool
    level: Optional[int]
    e_checked: int


def closure_membership(
    R: RingPresentation, y: Polynomial, ideal: IdealHandle, e_max: Optional[int] = None
) -> MembershipOutcome:
    """Smallest e <= e_max with y^(p^e) in I^[p^e] + J."""
    e_max = config.EMAX if e_max is None else e_max
    maxdeg = ideal.max_generator_degree()
    checked = 0
    for e in range(e_max + 1):
        q = R.p**e
        if e > 0 and not level_allowed(q, maxdeg):
            break
        checked = e
        target = R.ideal(bracket_power(ideal, q).generators)
        if target.contains(y.frobenius_power(q)):
            return MembershipOutcome(True, e, e)
    return MembershipOutcome(False, None, checked)


def membership_verdict(
    R: RingPresentation, y: Polynomial, ideal: IdealHandle, e_max: Optional[int] = None
) -> Verdict:
    e_max = config.EMAX if e_max is None else e_max
    outcome = closure_membership(R, y, ideal, e_max)
    if outcome.in_closure:
        return Verdict.proven(
            Properties.CLOSURE_MEMBERSHIP,
            f"y^q lies in I^[q] + J at q = p^{outcome.level}",
            witness={"y": y, "level": outcome.level},
        )
    return Verdict.evidence(
        Properties.CLOSURE_MEMBERSHIP,
        f"y^q stays outside I^[q] + J for every level up to {outcome.e_checked}",
        holds=False,
        budget={"e_max": e_max, "effective_e_max": outcome.e_checked},
    )


@dataclass
class ClosureOutcome:
    closed: bool
    e_max: int                      # effective number of levels examined
    requested_e_max: int
    chain: list[IdealHandle] = field(default_factory=list)
    witness: Optional[Polynomial] = None
    level: Optional[int] = None
    scanned_degree: Optional[int] = None   # None: every degree of R/(I+J) was covered


def _stage_degrees(R: RingPresentation, base: IdealHandle) -> tuple[list[int], Optional[int]]:
    if krull_dimension(base) == 0:
        return sorted({R.ambient.weighted_degree(m) for m in standard_monomials(base)}), None
    bound = base.max_generator_degree() + config.CLOSURE_EXTRA_DEGREES * max(R.weights)
    return list(range(bound + 1)), bound


def preimage_elements(
    R: RingPresentation, base: IdealHandle, target: IdealHandle, q: int, degrees: Sequence[int]
) -> list[Polynomial]:
    """Elements y outside `base` with y^q in `target`, from the lowest degree that has any."""
    p = R.p
    for d in degrees:
        basis = graded_piece_basis(base, d)
        if not basis:
            continue
        images = [target.normal_form(R.ambient.monomial(b).frobenius_power(q)) for b in basis]
        monos = sorted({m for img in images for m in img.data}, key=R.ambient.sort_key, reverse=True)
        rows = [[img.data.get(m, 0) for img in images] for m in monos]
        kernel = kernel_mod_p(rows, len(basis), p)
        if kernel:
            return [R.ambient.from_terms(zip(v, basis)).monic() for v in kernel]
    return []


def frobenius_closure(R: RingPresentation, ideal: IdealHandle, e_max: Optional[int] = None) -> ClosureOutcome:
    e_max = config.EMAX if e_max is None else e_max
    base = R.ideal(ideal.generators)
    outcome = ClosureOutcome(closed=True, e_max=0, requested_e_max=e_max, chain=[base])
    if base.is_unit():
        outcome.e_max = e_max
        return outcome
    degrees, outcome.scanned_degree = _stage_degrees(R, base)
    maxdeg = ideal.max_generator_degree()
    for e in range(1, e_max + 1):
        q = R.p**e
        if not level_allowed(q, maxdeg):
            logger.info(
                "Closure level skipped by degree cap",
                extra={"data": {"ring": R.name, "e": e, "q": q, "max_degree": maxdeg}},
            )
            break
        target = R.ideal(bracket_power(ideal, q).generators)
        new = preimage_elements(R, base, target, q, degrees)
        outcome.e_max = e
        if new:
            outcome.chain.append(base.extended(new))
            outcome.closed = False
            outcome.witness = new[0]
            outcome.level = e
            return outcome
        outcome.chain.append(base)
    return outcome


def is_frobenius_closed(R: RingPresentation, ideal: IdealHandle, e_max: Optional[int] = None) -> Verdict:
    outcome = frobenius_closure(R, ideal, e_max)
    gens = [str(g) for g in ideal.generators]
    if not outcome.closed:
        return Verdict.refuted(
            Properties.FROBENIUS_CLOSED,
            f"y^(p^{outcome.level}) lies in the bracket power but y is not in the ideal",
            witness={"y": outcome.witness, "level": outcome.level, "ideal": gens},
        )
    return Verdict.evidence(
        Properties.FROBENIUS_CLOSED,
        f"closure stages equal the ideal for e <= {outcome.e_max}",
        budget={
            "ideal": gens,
            "e_max": outcome.requested_e_max,
            "effective_e_max": outcome.e_max,
            "scanned_degree": outcome.scanned_degree,
        },
    )


def fedder_f_pure(R: RingPresentation) -> Verdict:
    """R = S/J is F-pure iff (J^[p] : J) is not contained in m^[p]."""
    J = R.defining
    p = R.p
    if J.is_zero():
        return Verdict.proven(
            Properties.F_PURE, "polynomial ring", witness={"escaping_generator": "1"}
        )
    colon_ideal = colon(bracket_power(J, p), J)
    frob_m = bracket_power(maximal_ideal(R.ambient), p)
    escaping = [g for g in colon_ideal.gb if not frob_m.contains(g)]
    root_is_unit = frobenius_root(IdealHandle(R.ambient, colon_ideal.gb), p).is_unit()
    if bool(escaping) != root_is_unit:
        raise CertificateError("Fedder colon and its Frobenius root disagree")
    logger.debug(
        "Fedder test",
        extra={"data": {"ring": R.name, "colon_size": len(colon_ideal.gb), "escaping": len(escaping)}},
    )
    if escaping:
        return Verdict.proven(
            Properties.F_PURE,
            "(J^[p] : J) is not contained in m^[p]",
            witness={"escaping_generator": escaping[0]},
        )
    return Verdict.refuted(
        Properties.F_PURE,
        "(J^[p] : J) is contained in m^[p]",
        witness={"colon_generators": list(colon_ideal.gb)},
    )
