import pytest
from pydantic import ValidationError

from constants import Properties
from models.fixture import FixtureRing, RingGenerator
from models.report import Contradiction, Report
from models.verdict import Verdict, to_jsonable


class TestVerdict:
    def test_refuted_needs_witness(self):
        with pytest.raises(ValidationError):
            Verdict(property=Properties.F_PURE, kind="refuted")

    def test_inconclusive_needs_reason(self):
        with pytest.raises(ValidationError):
            Verdict(property=Properties.F_PURE, kind="inconclusive")

    def test_supports(self):
        assert Verdict.proven(Properties.REDUCED, "J = 0").supports
        assert Verdict.evidence(Properties.FLC, "stable").supports
        assert not Verdict.evidence(Properties.FLC, "drifts", holds=False).supports
        assert not Verdict.inconclusive(Properties.FLC, "budget").supports

    def test_polynomial_witness_serializes_as_text(self, ring3):
        x, y, _ = ring3(2).gens()
        verdict = Verdict.refuted(Properties.SOP_CLOSURE, "z escapes", witness={"element": x * y + x})
        assert verdict.model_dump()["witness"] == {"element": "x*y + x"}

    def test_to_jsonable_recurses(self, ring3):
        x = ring3(3).gen(0)
        assert to_jsonable({1: (x, [2, None])}) == {"1": ["x", [2, None]]}


class TestReport:
    def test_entry_returns_last_verdict(self):
        report = Report(command="classify", headline=Properties.F_INJECTIVE)
        report.entries.append(Verdict.evidence(Properties.F_INJECTIVE, "first"))
        report.entries.append(Verdict.refuted(Properties.F_INJECTIVE, "second", witness={"y": "z"}))
        assert report.entry(Properties.F_INJECTIVE).claim == "second"
        assert report.any_refuted_headline()
        assert report.entry(Properties.FLC) is None

    def test_nested_reports(self):
        child = Report(command="classify", headline=Properties.F_INJECTIVE)
        child.contradictions.append(Contradiction(rule="r", properties=["a"], detail="d"))
        parent = Report(command="report", rings=[child])
        assert len(parent.all_contradictions()) == 1
        assert not parent.any_refuted_headline()

    def test_versions_in_json(self):
        dumped = Report(command="classify").model_dump()
        assert dumped["format_version"] == "1.0"
        assert "tool_version" in dumped


class TestFixtureModels:
    def test_expectation_needs_provenance(self):
        with pytest.raises(ValidationError, match="without provenance"):
            FixtureRing(name="r", p=2, variables=["x"], expected={"f_pure": "proven"})

    def test_generator_bounds(self):
        assert RingGenerator().max_vars == 4
        with pytest.raises(ValidationError):
            RingGenerator(max_vars=6)
        with pytest.raises(ValidationError):
            RingGenerator(primes=[7])
        with pytest.raises(ValidationError):
            RingGenerator(family="toric")
