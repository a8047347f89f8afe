"""
Quotient ring presentations R = F_p[x_1..x_m]/J, systems of parameters,
lengths and multiplicities of parameter ideals.
"""

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from sympy import Poly, ZZ, div, prod

from algebra.field import FieldSpec
from algebra.hilbert import hilbert_series_numerator, series_coefficients, t
from algebra.ideal import IdealHandle, graded_piece_basis, ideal_product, krull_dimension, standard_monomials
from algebra.polynomial import Polynomial, PolynomialRing
from config import config
from constants import Properties
from exceptions import ArgumentError, CertificateError, RingValidationError, ResourceExhausted
from logging_config import get_logger
from models.verdict import Verdict
from utils.poly_parser import parse_polynomial, valid_variable_name
from utils.seeds import sample_rng

logger = get_logger("ringkit")


@dataclass(frozen=True)
class HilbertData:
    numerator: Poly
    weights: tuple[int, ...]

    def hilbert_function(self, d: int) -> int:
        return series_coefficients(self.numerator, self.weights, d)[d]


@dataclass(frozen=True, eq=False)
class RingPresentation:
    name: str
    field: FieldSpec
    ambient: PolynomialRing
    defining: IdealHandle
    dim: int
    hilbert: HilbertData

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ambient.variables

    @property
    def weights(self) -> tuple[int, ...]:
        return self.ambient.weights

    @property
    def gb_J(self) -> tuple[Polynomial, ...]:
        return self.defining.gb

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ambient)

    def ideal(self, polys: Sequence[Polynomial] = ()) -> IdealHandle:
        """The ideal J + (polys) of S, representing (polys)R."""
        return self.defining.extended(polys)

    def maximal(self) -> list[Polynomial]:
        return self.ambient.gens()

    def same_presentation(self, other: "RingPresentation") -> bool:
        return (
            self.p == other.p
            and self.variables == other.variables
            and self.weights == other.weights
            and self.defining.generators == other.defining.generators
        )

    def echo(self) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "variables": list(self.variables),
            "weights": list(self.weights),
            "generators": [str(g) for g in self.defining.generators],
            "dim": self.dim,
        }


@dataclass(frozen=True, eq=False)
class ParameterSystem:
    elements: tuple[Polynomial, ...]
    degrees: tuple[int, ...]
    certificate: tuple[int, ...]   # dim of R/(x_1..x_i) for each prefix length i
    deep_level: int = 0            # largest N with every element certified in m^N

    def __len__(self) -> int:
        return len(self.elements)

    def strings(self) -> list[str]:
        return [str(x) for x in self.elements]


def build_ring(
    p: int,
    variables: Sequence[str],
    weights: Optional[Sequence[int]],
    generators: Sequence[Union[Polynomial, str]],
    name: str = "ring",
) -> RingPresentation:
    field_spec = FieldSpec(p)
    for var in variables:
        if not valid_variable_name(var):
            raise RingValidationError(f"invalid variable name: {var!r}")
    try:
        ambient = PolynomialRing(field_spec, variables, weights)
    except ArgumentError as exc:
        raise RingValidationError(exc.detail) from exc

    gens = []
    for g in generators:
        poly = parse_polynomial(g, ambient) if isinstance(g, str) else g
        ambient.check_same(poly.ring)
        if not poly.is_quasi_homogeneous():
            raise RingValidationError(
                f"inhomogeneous generator {poly}: term degrees {poly.term_degrees()}"
            )
        gens.append(poly)

    defining = IdealHandle(ambient, gens)
    if defining.is_unit():
        raise RingValidationError("defining ideal is the unit ideal")
    dim = krull_dimension(defining)
    hilbert = HilbertData(hilbert_series_numerator(defining), ambient.weights)
    logger.debug(
        "Ring built",
        extra={"data": {"name": name, "p": p, "dim": dim, "gb_size": len(defining.gb)}},
    )
    return RingPresentation(name, field_spec, ambient, defining, dim, hilbert)


def _certificate(R: RingPresentation, elements: Sequence[Polynomial]) -> tuple[int, ...]:
    return tuple(krull_dimension(R.ideal(elements[: i + 1])) for i in range(len(elements)))


def certify_sequence(R: RingPresentation, elements: Sequence[Polynomial], full: bool = True) -> ParameterSystem:
    """Certify a (partial) system of parameters: every prefix drops the dimension by one."""
    elements = tuple(elements)
    if len(elements) > R.dim or (full and len(elements) != R.dim):
        raise ArgumentError(f"expected {R.dim} parameters, got {len(elements)}")
    for x in elements:
        R.ambient.check_same(x.ring)
        if x.is_zero() or not x.is_quasi_homogeneous() or x.degree() < 1:
            raise ArgumentError(f"parameter {x} is not a nonconstant quasi-homogeneous form")
    cert = _certificate(R, elements)
    for i, d in enumerate(cert):
        if d != R.dim - i - 1:
            raise ArgumentError(
                f"not a system of parameters: prefix of length {i + 1} has dimension {d}"
            )
    return ParameterSystem(
        elements,
        tuple(x.degree() for x in elements),
        cert,
        min((x.min_exponent_sum() for x in elements), default=0),
    )


def find_sop(
    R: RingPresentation,
    seed: int = 0,
    max_degree: Optional[int] = None,
    max_tries: Optional[int] = None,
    start_degrees: Optional[Sequence[int]] = None,
) -> ParameterSystem:
    """Random quasi-homogeneous system of parameters with escalating degrees; deterministic in seed."""
    max_degree = max_degree or config.SOP_MAX_DEGREE
    max_tries = max_tries or config.SOP_MAX_TRIES
    n = R.dim
    if n == 0:
        return ParameterSystem((), (), (), 0)
    rng = random.Random(seed)
    wmin, wmax = min(R.weights), max(R.weights)
    top = max_degree * wmax
    elements: list[Polynomial] = []
    current = R.defining

    for i in range(n):
        start = wmin
        if start_degrees is not None and i < len(start_degrees):
            start = min(max(start_degrees[i], wmin), top)
        degrees = list(range(start, top + 1)) + list(range(wmin, start))
        per_degree = max(2, max_tries // len(degrees))
        tries = 0
        found = None
        for d in degrees:
            basis = graded_piece_basis(current, d)
            if not basis:
                continue
            for _ in range(per_degree):
                if tries >= max_tries:
                    break
                tries += 1
                coeffs = [rng.randrange(R.p) for _ in basis]
                if not any(coeffs):
                    continue
                f = R.ambient.from_terms(zip(coeffs, basis))
                if krull_dimension(current.extended([f])) == n - i - 1:
                    found = f
                    break
            if found is not None or tries >= max_tries:
                break
        if found is None:
            raise ResourceExhausted("no s.o.p. found within budget")
        elements.append(found)
        current = current.extended([found])

    return certify_sequence(R, elements)


def power_sop(R: RingPresentation, sop: ParameterSystem, N: int) -> ParameterSystem:
    """(x_1^N, ..., x_n^N) with refreshed certificates and the certified m^N' level."""
    if N < 1:
        raise ArgumentError("power_sop needs N >= 1")
    if N == 1:
        return sop
    return certify_sequence(R, [x**N for x in sop.elements], full=len(sop) == R.dim)


def sop_ideal(R: RingPresentation, elements: Sequence[Polynomial]) -> IdealHandle:
    return R.ideal(list(elements))


def length(R: RingPresentation, ideal: IdealHandle) -> int:
    """Length of R/I, the number of standard monomials of J + I."""
    R.ambient.check_same(ideal.ring)
    quotient = R.defining.extended(ideal.generators)
    if krull_dimension(quotient) > 0:
        raise ArgumentError("infinite length: quotient is not zero-dimensional")
    return len(standard_monomials(quotient))


def multiplicity(R: RingPresentation, sop: ParameterSystem) -> int:
    """e(q; R) as the value at 1 of HS_R(t) * prod(1 - t^d_i)."""
    numerator = R.hilbert.numerator * Poly(prod([1 - t**d for d in sop.degrees]), t, domain=ZZ)
    denominator = Poly(prod([1 - t**w for w in R.weights]), t, domain=ZZ)
    quotient, remainder = div(numerator, denominator)
    if not remainder.is_zero:
        raise CertificateError(
            f"Hilbert series times parameter factors is not a polynomial (degrees {list(sop.degrees)})"
        )
    return int(quotient.eval(1))


@dataclass
class SamuelCheck:
    value: Optional[int]
    lengths: list[int] = field(default_factory=list)
    stable_from: Optional[int] = None


def _difference(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def multiplicity_finite_difference(
    R: RingPresentation, sop: ParameterSystem, t_max: Optional[int] = None, stable: int = 3
) -> SamuelCheck:
    """Hilbert-Samuel cross-check: the n-th difference of k -> length(R/q^k) once it holds for `stable` steps."""
    t_max = t_max or config.TMAX
    n = len(sop)
    lengths: list[int] = []
    base = IdealHandle(R.ambient, sop.elements)
    power = base
    for k in range(1, t_max + 1):
        if k > 1 and n:
            power = ideal_product(power, base)
        lengths.append(length(R, R.ideal(power.generators)))
        diffs = _difference(lengths, n)
        if len(diffs) >= stable and len(set(diffs[-stable:])) == 1:
            return SamuelCheck(diffs[-1], lengths, k - n - stable + 1)
    logger.info(
        "Finite-difference multiplicity did not stabilize",
        extra={"data": {"ring": R.name, "t_max": t_max, "lengths": lengths}},
    )
    return SamuelCheck(None, lengths)


def is_cohen_macaulay(R: RingPresentation, sop: ParameterSystem) -> Verdict:
    ell = length(R, sop_ideal(R, sop.elements))
    e = multiplicity(R, sop)
    if ell < e:
        raise CertificateError(f"length {ell} below multiplicity {e}")
    payload = {"length": ell, "multiplicity": e, "sop": sop.strings()}
    if ell == e:
        return Verdict.proven(Properties.COHEN_MACAULAY, "length equals multiplicity", witness=payload)
    return Verdict.refuted(Properties.COHEN_MACAULAY, "length exceeds multiplicity", witness=payload)


def sample_sop(
    R: RingPresentation,
    seed: int,
    channel: str,
    k: int,
    max_degree: Optional[int] = None,
    max_tries: Optional[int] = None,
) -> ParameterSystem:
    """Sample k of a channel. Sample 0 starts every element at the lowest degree; later samples mix degrees."""
    max_degree = max_degree or config.SOP_MAX_DEGREE
    rng = sample_rng(seed, channel, k)
    start = None
    if k > 0:
        wmin = min(R.weights)
        start = [wmin * rng.randint(1, max_degree) for _ in range(R.dim)]
    return find_sop(R, rng.getrandbits(64), max_degree, max_tries, start)
