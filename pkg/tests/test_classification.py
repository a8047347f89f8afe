import pytest

from constants import ContradictionRules, Properties
from exceptions import CertificateError, ResourceExhausted
from models.verdict import Verdict
from services.classification import Pipeline, classify, finjective, reducedness_screen
from services.finjective import lc_presentation
from services.ringkit import build_ring, certify_sequence


class TestReducedness:
    def test_polynomial_ring(self, poly3):
        assert reducedness_screen(poly3).witness == {"path": "polynomial"}

    def test_squarefree_monomial(self, two_planes):
        assert reducedness_screen(two_planes).is_proven

    def test_univariate_repeated_factor(self, dual_numbers):
        verdict = reducedness_screen(dual_numbers)
        assert verdict.is_refuted
        assert verdict.model_dump()["witness"]["nilpotent"] == "x"

    def test_univariate_power(self):
        R = build_ring(5, ["x", "y"], None, ["x^3"])
        verdict = reducedness_screen(R)
        assert verdict.is_refuted
        assert verdict.witness["generator"] == R.defining.generators[0]

    def test_nilpotent_variable(self):
        R = build_ring(2, ["x", "y"], None, ["x^2", "x*y"])
        verdict = reducedness_screen(R)
        assert verdict.is_refuted
        assert verdict.witness["power"] == 2

    def test_otherwise_flagged(self, cusp):
        verdict = reducedness_screen(cusp)
        assert verdict.kind == "inconclusive"
        assert verdict.reason == "assumed reduced, flagged"


class TestPipelinePlumbing:
    def test_budget_errors_become_inconclusive(self, node):
        pipeline = Pipeline(node, {"seed": 4})

        def exhausted():
            raise ResourceExhausted("no s.o.p. found within budget")

        verdict = pipeline.run(Properties.COHEN_MACAULAY, exhausted)
        assert verdict.kind == "inconclusive"
        assert verdict.seed == 4
        assert pipeline.entries == [verdict]

    def test_certificate_errors_escape(self, node):
        pipeline = Pipeline(node)

        def broken():
            raise CertificateError("graded multiplicity 2 differs from Samuel multiplicity 3")

        with pytest.raises(CertificateError):
            pipeline.run(Properties.MULTIPLICITY, broken)

    def test_wall_time_only_with_timings(self, node):
        quiet = Pipeline(node).run(Properties.REDUCED, lambda: reducedness_screen(node))
        timed = Pipeline(node, timings=True).run(Properties.REDUCED, lambda: reducedness_screen(node))
        assert quiet.wall_time is None
        assert timed.wall_time is not None

    def test_missing_sop_is_inconclusive(self, node):
        pipeline = Pipeline(node)
        verdict = pipeline.run(Properties.TOP_COHOMOLOGY, pipeline.need_sop)
        assert verdict.kind == "inconclusive"


def _seeded(pipeline, *verdicts):
    for verdict in verdicts:
        pipeline.entries.append(verdict)
        pipeline.results[verdict.property] = verdict


class TestContradictionRules:
    def test_f_pure_against_refuted_closure(self, node):
        pipeline = Pipeline(node)
        _seeded(
            pipeline,
            Verdict.proven(Properties.F_PURE, "escapes", witness={"escaping_generator": "1"}),
            Verdict.refuted(Properties.SOP_CLOSURE, "not closed", witness={"y": "x"}),
        )
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.FEDDER_CLOSURE]

    def test_flc_and_closed_parameters_force_buchsbaum(self, node):
        pipeline = Pipeline(node)
        _seeded(
            pipeline,
            Verdict.evidence(Properties.FLC, "stable"),
            Verdict.evidence(Properties.SOP_CLOSURE, "closed"),
            Verdict.refuted(Properties.BUCHSBAUM, "colon", witness={"channel": "buchsbaum_colon"}),
        )
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.FLC_CLOSED_BUCHSBAUM]

    def test_delta_above_constant(self, node):
        pipeline = Pipeline(node)
        pipeline.C = 1
        _seeded(
            pipeline,
            Verdict.evidence(Properties.FLC, "stable"),
            Verdict.evidence(Properties.BUCHSBAUM, "no witness", budget={"delta": 1, "deltas": [1, 2]}),
        )
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.DELTA_BOUND]

    def test_failed_consistency(self, node):
        pipeline = Pipeline(node)
        _seeded(pipeline, Verdict.evidence(Properties.C_CONSISTENCY, "binomial sum 2 differs from C = 1", holds=False))
        pipeline.check_contradictions()
        assert pipeline.contradictions[0].rule == ContradictionRules.C_CONSISTENCY

    def test_closed_sop_with_open_part(self, node):
        pipeline = Pipeline(node)
        _seeded(
            pipeline,
            Verdict.evidence(Properties.SOP_CLOSURE, "closed"),
            Verdict.refuted(Properties.PARTIAL_SOP_CLOSURE, "window 1", witness={"t": 1}),
        )
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.PARTIAL_CLOSURE]

    def test_buchsbaum_with_disagreeing_denominators(self, node):
        pipeline = Pipeline(node)
        _seeded(
            pipeline,
            Verdict.evidence(Properties.BUCHSBAUM, "no witness"),
            Verdict.refuted(Properties.UNMIXED_DENOMINATOR, "k=2", witness={"k": 2}),
        )
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.UNMIXED]

    def test_cohen_macaulay_with_middle_cohomology(self, two_planes):
        x, y, u, v = two_planes.maximal()
        pipeline = Pipeline(two_planes)
        pipeline.presentations.append(lc_presentation(two_planes, certify_sequence(two_planes, [x + u, y + v]), 1))
        _seeded(pipeline, Verdict.proven(Properties.COHEN_MACAULAY, "regular sequence"))
        pipeline.check_contradictions()
        assert [c.rule for c in pipeline.contradictions] == [ContradictionRules.CM_COHOMOLOGY]

    def test_quiet_when_nothing_conflicts(self, node):
        pipeline = Pipeline(node)
        _seeded(pipeline, Verdict.proven(Properties.F_PURE, "escapes", witness={"escaping_generator": "1"}))
        pipeline.check_contradictions()
        assert pipeline.contradictions == []


class TestRuns:
    def test_two_planes(self, two_planes, fast_budget):
        report = classify(two_planes, fast_budget)
        assert report.entry(Properties.COHEN_MACAULAY).is_refuted
        assert report.entry(Properties.BUCHSBAUM).kind == "evidence"
        assert report.entry(Properties.F_PURE).is_proven
        assert report.data["C"] == 1
        assert report.contradictions == []
        assert report.headline_verdict().kind == "evidence"
        lengths = [summary["length"] for summary in report.data["local_cohomology"]]
        assert lengths == [0, 1]

    def test_cusp_is_not_f_injective(self, cusp, fast_budget):
        report = finjective(cusp, fast_budget)
        verdict = report.headline_verdict()
        assert verdict.is_refuted
        assert verdict.witness["channel"] == Properties.CM_F_INJECTIVE
        assert report.model_dump()["entries"][-1]["witness"]["y"] == "z"
        assert report.entry(Properties.F_PURE) is None
        assert report.contradictions == []

    def test_nilpotents_refute_f_injectivity(self, dual_numbers, fast_budget):
        report = finjective(dual_numbers, fast_budget)
        verdict = report.headline_verdict()
        assert verdict.is_refuted
        assert verdict.witness["channel"] == Properties.REDUCED

    def test_deterministic_in_seed(self, node, fast_budget):
        first = classify(node, fast_budget).model_dump_json()
        second = classify(node, fast_budget).model_dump_json()
        assert first == second


@pytest.mark.slow
def test_two_planes_full_dossier(two_planes):
    budget = {"seed": 0, "samples": 20, "e_max": 3, "deep_schedule": [2, 3]}
    report = classify(two_planes, budget)
    cm = report.entry(Properties.COHEN_MACAULAY)
    assert cm.is_refuted
    assert (cm.witness["length"], cm.witness["multiplicity"]) == (3, 2)
    buchsbaum = report.entry(Properties.BUCHSBAUM)
    assert buchsbaum.kind == "evidence"
    assert buchsbaum.budget["deltas"] == [1] * 20
    assert report.data["C"] == 1
    assert report.entry(Properties.C_CONSISTENCY).holds is True
    assert [summary["length"] for summary in report.data["local_cohomology"]] == [0, 1]
    assert all(v.is_proven for v in report.entries if v.property == Properties.F_INJECTIVE_MATRIX)
    closure = report.entry(Properties.SOP_CLOSURE)
    assert closure.kind == "evidence"
    assert closure.budget["samples"] == 20
    assert closure.budget["e_max"] == 3
    unmixed = [v for v in report.entries if v.property == Properties.UNMIXED_DENOMINATOR]
    assert [v.witness["k"] for v in unmixed] == [2, 3]
    assert all(v.is_proven for v in unmixed)
    assert report.contradictions == []
