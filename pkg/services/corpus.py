"""
Built-in fixture rings with their expected partial reports, and the seeded
random-ring generators that feed the search loop.
"""

from typing import Iterator, Optional

from algebra.field import FieldSpec
from algebra.polynomial import PolynomialRing
from constants import Families, Properties
from exceptions import ResourceExhausted
from logging_config import get_logger
from models.fixture import FixtureRing, RingGenerator
from models.report import Report
from services.ringkit import RingPresentation, build_ring
from utils.seeds import sample_rng

logger = get_logger("corpus")

VARIABLE_NAMES = ("x", "y", "z", "u", "v")
MAX_ATTEMPTS = 50

TRIVIAL_POLY = "polynomial rings are regular: Cohen-Macaulay with length equal to multiplicity"
FEDDER_MONOMIAL = "Fedder: the product of the variables of J^[p]:J escapes m^[p] for squarefree monomial J"
TWO_PLANES = "hand count: length 3 and multiplicity 2 on (x+u, y+v); H^1 is one copy of the field"
CUSP = "hand expansion: z^2 = x^3 + y^3 lies in (x^2, y^2) + J while z is not in (x, y)"
FERMAT = "direct expansion of (x^3+y^3+z^3)^(p-1) and the monomial escape test"
PLANE_LINE = "0 : z contains x, so the colon channel finds a witness"


def _polynomial_fixture(p: int) -> FixtureRing:
    return FixtureRing(
        name=f"poly-{p}",
        p=p,
        variables=["x", "y"],
        generators=[],
        expected={
            Properties.COHEN_MACAULAY: "proven",
            Properties.F_PURE: "proven",
            Properties.BUCHSBAUM: "evidence",
            "delta": 0,
            "contradictions": 0,
        },
        provenance={
            Properties.COHEN_MACAULAY: TRIVIAL_POLY,
            Properties.F_PURE: "J = 0",
            Properties.BUCHSBAUM: "regular rings are Buchsbaum; every channel is exact",
            "delta": TRIVIAL_POLY,
            "contradictions": "consistency of the channels",
        },
    )


def _random_squarefree_fixture(seed: int) -> FixtureRing:
    R = next(generate(RingGenerator(family=Families.SQUAREFREE_MONOMIAL, max_vars=4, primes=[2], seed=seed), 1))
    return FixtureRing(
        name=f"squarefree-seed{seed}",
        p=R.p,
        variables=list(R.variables),
        weights=list(R.weights),
        generators=[str(g) for g in R.defining.generators],
        expected={Properties.REDUCED: "proven", Properties.F_PURE: "proven"},
        provenance={
            Properties.REDUCED: "squarefree monomial ideals are radical",
            Properties.F_PURE: FEDDER_MONOMIAL,
        },
    )


def fixtures() -> list[FixtureRing]:
    rings = [_polynomial_fixture(p) for p in (2, 3, 5)]
    rings += [
        FixtureRing(
            name="node",
            p=3,
            variables=["x", "y"],
            generators=["x*y"],
            expected={Properties.COHEN_MACAULAY: "proven", Properties.F_PURE: "proven", "delta": 0},
            provenance={
                Properties.COHEN_MACAULAY: "hypersurfaces are Cohen-Macaulay",
                Properties.F_PURE: FEDDER_MONOMIAL,
                "delta": "Cohen-Macaulay: length equals multiplicity",
            },
        ),
        FixtureRing(
            name="two-planes",
            p=2,
            variables=["x", "y", "u", "v"],
            generators=["x*u", "x*v", "y*u", "y*v"],
            expected={
                Properties.COHEN_MACAULAY: "refuted",
                Properties.BUCHSBAUM: "evidence",
                Properties.F_PURE: "proven",
                "delta": 1,
                "C": 1,
                "contradictions": 0,
            },
            provenance={
                Properties.COHEN_MACAULAY: TWO_PLANES,
                Properties.BUCHSBAUM: "two planes meeting in a point: H^1 = k concentrated in degree 0",
                Properties.F_PURE: FEDDER_MONOMIAL,
                "delta": TWO_PLANES,
                "C": "binomial sum of local cohomology lengths: C(1,1) * 1",
                "contradictions": "consistency of the channels",
            },
        ),
        FixtureRing(
            name="plane-line",
            p=2,
            variables=["x", "y", "z"],
            generators=["x*y", "x*z"],
            expected={Properties.BUCHSBAUM: "refuted", Properties.F_PURE: "proven", Properties.REDUCED: "proven"},
            provenance={
                Properties.BUCHSBAUM: PLANE_LINE,
                Properties.F_PURE: FEDDER_MONOMIAL,
                Properties.REDUCED: "squarefree monomial ideals are radical",
            },
        ),
        FixtureRing(
            name="char2-cusplike",
            p=2,
            variables=["x", "y", "z"],
            weights=[2, 2, 3],
            generators=["z^2 + x^3 + y^3"],
            expected={
                Properties.COHEN_MACAULAY: "proven",
                Properties.F_PURE: "refuted",
                Properties.F_INJECTIVE: "refuted",
                "contradictions": 0,
            },
            provenance={
                Properties.COHEN_MACAULAY: "hypersurfaces are Cohen-Macaulay; length 2 equals multiplicity 2",
                Properties.F_PURE: "F-pure rings are F-injective, and this ring is not",
                Properties.F_INJECTIVE: CUSP,
                "contradictions": "consistency of the channels",
            },
        ),
        FixtureRing(
            name="fermat-p5",
            p=5,
            variables=["x", "y", "z"],
            generators=["x^3 + y^3 + z^3"],
            expected={Properties.F_PURE: "refuted"},
            provenance={Properties.F_PURE: FERMAT},
        ),
        FixtureRing(
            name="fermat-p7",
            p=7,
            variables=["x", "y", "z"],
            generators=["x^3 + y^3 + z^3"],
            expected={Properties.F_PURE: "proven", Properties.COHEN_MACAULAY: "proven"},
            provenance={Properties.F_PURE: FERMAT, Properties.COHEN_MACAULAY: "hypersurfaces are Cohen-Macaulay"},
        ),
    ]
    rings += [_random_squarefree_fixture(seed) for seed in (3, 17)]
    return rings


def fixture_by_name(name: str) -> Optional[FixtureRing]:
    for fixture in fixtures():
        if fixture.name == name:
            return fixture
    return None


def build_fixture(fixture: FixtureRing) -> RingPresentation:
    return build_ring(fixture.p, fixture.variables, fixture.weights, fixture.generators, name=fixture.name)


def observed_value(report: Report, key: str):
    """The report field an expectation key refers to."""
    if key == "contradictions":
        return len(report.contradictions)
    if key == "C":
        return report.data.get("C")
    if key == "delta":
        buchsbaum = report.entry(Properties.BUCHSBAUM)
        return (buchsbaum.budget or {}).get("delta") if buchsbaum else None
    verdict = report.entry(key)
    return verdict.kind if verdict else None


def mismatches(fixture: FixtureRing, report: Report) -> list[str]:
    out = []
    for key, expected in fixture.expected.items():
        got = observed_value(report, key)
        if got != expected:
            out.append(f"{fixture.name}: {key} expected {expected!r}, got {got!r}")
    return out


# --- generators ---


def _squarefree_monomial(rng, gen: RingGenerator, m: int):
    count = rng.randint(1, m)
    gens = set()
    for _ in range(count):
        size = rng.randint(2, min(gen.max_degree, m))
        chosen = sorted(rng.sample(range(m), size))
        gens.add("*".join(VARIABLE_NAMES[i] for i in chosen))
    return None, sorted(gens)


def _exponent_vector(rng, m: int, d: int) -> list[int]:
    exps = [0] * m
    for _ in range(d):
        exps[rng.randrange(m)] += 1
    return exps


def _monomial_text(exps) -> str:
    factors = []
    for name, a in zip(VARIABLE_NAMES, exps):
        if a == 1:
            factors.append(name)
        elif a > 1:
            factors.append(f"{name}^{a}")
    return "*".join(factors)


def _binomial(rng, gen: RingGenerator, m: int):
    gens = []
    for _ in range(rng.randint(1, m - 1)):
        d = rng.randint(2, gen.max_degree)
        a = _exponent_vector(rng, m, d)
        b = _exponent_vector(rng, m, d)
        if a != b:
            gens.append(f"{_monomial_text(a)} - {_monomial_text(b)}")
    return None, gens


def _hypersurface(rng, gen: RingGenerator, m: int, p: int):
    weights = [rng.randint(1, 3) for _ in range(m)]
    ring = PolynomialRing(FieldSpec(p), VARIABLE_NAMES[:m], weights)
    top = gen.max_degree * max(weights)
    degrees = [
        d for d in range(2, top + 1)
        if any(2 <= sum(e) <= gen.max_degree for e in ring.monomials_of_degree(d))
    ]
    d = rng.choice(degrees)
    monomials = [e for e in ring.monomials_of_degree(d) if 2 <= sum(e) <= gen.max_degree]
    chosen = rng.sample(monomials, rng.randint(1, min(4, len(monomials))))
    terms = [f"{rng.randint(1, p - 1)}*{_monomial_text(e)}" for e in chosen]
    return weights, [" + ".join(terms)]


def _draw(rng, gen: RingGenerator, name: str) -> Optional[RingPresentation]:
    p = rng.choice(gen.primes)
    m = rng.randint(2, gen.max_vars)
    if gen.family == Families.SQUAREFREE_MONOMIAL:
        weights, gens = _squarefree_monomial(rng, gen, m)
    elif gen.family == Families.BINOMIAL:
        weights, gens = _binomial(rng, gen, m)
    else:
        weights, gens = _hypersurface(rng, gen, m, p)
    if not gens:
        return None
    R = build_ring(p, VARIABLE_NAMES[:m], weights, gens, name=name)
    return R if R.dim >= 1 else None


def generate(gen: RingGenerator, count: int) -> Iterator[RingPresentation]:
    """Deterministic stream of distinct validated rings; ring k draws from its own split seed."""
    seen = set()
    for k in range(count):
        rng = sample_rng(gen.seed, gen.family, k)
        for _ in range(MAX_ATTEMPTS):
            R = _draw(rng, gen, f"{gen.family}-s{gen.seed}-{k}")
            if R is None:
                continue
            key = (R.p, R.variables, R.weights, tuple(R.defining.gb))
            if key in seen:
                continue
            seen.add(key)
            yield R
            break
        else:
            raise ResourceExhausted(f"no new {gen.family} ring after {MAX_ATTEMPTS} draws")
        logger.debug("Ring generated", extra={"data": {"family": gen.family, "k": k, "name": R.name}})
