import pytest

from constants import Families
from exceptions import ResourceExhausted
from models.fixture import RingGenerator
from services import corpus
from services.classification import classify
from services.corpus import build_fixture, fixture_by_name, fixtures, generate, mismatches

CORPUS_BUDGET = {"seed": 0, "samples": 6, "e_max": 2, "deep_schedule": [2, 3]}


def test_fixture_names_are_unique():
    names = [f.name for f in fixtures()]
    assert len(names) == len(set(names))
    assert fixture_by_name("two-planes").p == 2
    assert fixture_by_name("nope") is None


@pytest.mark.parametrize("name", [f.name for f in fixtures()])
def test_fixture_expectations(name):
    fixture = fixture_by_name(name)
    report = classify(build_fixture(fixture), CORPUS_BUDGET)
    assert mismatches(fixture, report) == []


@pytest.mark.parametrize("family", Families.ALL)
def test_generation_is_deterministic(family):
    gen = RingGenerator(family=family, seed=9, max_vars=3)
    first = [R.echo() for R in generate(gen, 3)]
    second = [R.echo() for R in generate(gen, 3)]
    assert first == second
    assert len({str((echo["p"], echo["variables"], echo["weights"], echo["generators"])) for echo in first}) == 3


@pytest.mark.parametrize("family", Families.ALL)
def test_generated_rings_are_valid(family):
    gen = RingGenerator(family=family, seed=2, max_vars=4, max_degree=3, primes=[2, 3])
    for R in generate(gen, 4):
        assert R.dim >= 1
        assert R.p in (2, 3)
        assert all(g.is_quasi_homogeneous() for g in R.defining.generators)
        assert len(R.variables) <= 4


def test_seed_changes_the_stream():
    a = [(R.p, R.variables, R.echo()["generators"]) for R in generate(RingGenerator(seed=1), 3)]
    b = [(R.p, R.variables, R.echo()["generators"]) for R in generate(RingGenerator(seed=2), 3)]
    assert a != b


def test_draw_budget(monkeypatch):
    monkeypatch.setattr(corpus, "_draw", lambda rng, gen, name: None)
    with pytest.raises(ResourceExhausted, match="after 50 draws"):
        next(generate(RingGenerator(), 1))
