"""
The classification pipeline.

Every channel runs against one ring in a fixed order; channel failures inside
the budget become Inconclusive entries, and pairs of verdicts that the theory
forbids are collected in the contradiction section of the report.
"""

import time
from math import comb
from typing import Callable, Optional

from sympy import Poly, Symbol

from constants import ContradictionRules, Properties, VerdictKinds
from defaults import DEFAULT_BUDGET
from exceptions import ArgumentError, CertificateError, FsingError
from logging_config import channel_var, get_logger
from models.report import Contradiction, Report, RingEcho
from models.verdict import Verdict
from services.finjective import (
    STANDARDNESS,
    LCPresentation,
    cm_finjective_test,
    f_injective_on_Hi,
    frobenius_action_matrix,
    graded_window,
    lc_presentation,
    partial_sop_closure_check,
    sop_closure_sampling,
    top_cohomology_evidence,
)
from services.frobenius import fedder_f_pure
from services.parameters import (
    buchsbaum_constant,
    buchsbaum_verdict,
    flc_evidence,
    unmixed_denominator,
)
from services.ringkit import (
    ParameterSystem,
    RingPresentation,
    is_cohen_macaulay,
    multiplicity,
    multiplicity_finite_difference,
    sample_sop,
)

logger = get_logger("classification")

FLC_CONDITION = "finite local cohomology"


def reducedness_screen(R: RingPresentation) -> Verdict:
    """Fast paths only; anything else is assumed reduced and flagged."""
    J = R.defining
    if J.is_zero():
        return Verdict.proven(Properties.REDUCED, "polynomial ring", witness={"path": "polynomial"})
    gens = J.generators
    if all(len(g.data) == 1 and max(max(m) for m in g.data) <= 1 for g in gens):
        return Verdict.proven(
            Properties.REDUCED, "squarefree monomial ideal", witness={"path": "squarefree-monomial"}
        )
    if len(gens) == 1:
        f = gens[0]
        used = [k for k in range(len(R.variables)) if any(m[k] for m in f.data)]
        if len(used) == 1:
            k = used[0]
            x = Symbol(R.variables[k])
            univariate = Poly.from_dict({(m[k],): c for m, c in f.data.items()}, x, modulus=R.p)
            if univariate.is_sqf:
                return Verdict.proven(
                    Properties.REDUCED, "squarefree univariate hypersurface", witness={"path": "univariate"}
                )
            return Verdict.refuted(
                Properties.REDUCED,
                "univariate hypersurface with a repeated factor",
                witness={"nilpotent": R.ambient.gen(k), "generator": f},
            )
    nilpotent = _pure_power_nilpotent(R)
    if nilpotent is not None:
        return Verdict.refuted(Properties.REDUCED, "a variable is nilpotent", witness=nilpotent)
    return Verdict.inconclusive(Properties.REDUCED, "assumed reduced, flagged")


def _pure_power_nilpotent(R: RingPresentation) -> Optional[dict]:
    """A variable x with x not in J but some x^k in J."""
    top = R.defining.max_generator_degree()
    for k, x in enumerate(R.ambient.gens()):
        if R.defining.contains(x):
            continue
        for a in range(2, top // R.weights[k] + 1):
            if R.defining.contains(x**a):
                return {"nilpotent": x, "power": a}
    return None


class Pipeline:
    """One classification run. `full=False` keeps only the channels that decide F-injectivity."""

    def __init__(self, R: RingPresentation, budget: Optional[dict] = None, full: bool = True, timings: bool = False):
        self.R = R
        self.budget = {**DEFAULT_BUDGET, **(budget or {})}
        self.seed = self.budget["seed"]
        self.e_max = self.budget["e_max"]
        self.full = full
        self.timings = timings
        self.entries: list[Verdict] = []
        self.results: dict[str, Verdict] = {}
        self.matrices: list[Verdict] = []
        self.presentations: list[LCPresentation] = []
        self.contradictions: list[Contradiction] = []
        self.data: dict = {}
        self.sop: Optional[ParameterSystem] = None
        self.C: Optional[int] = None

    # --- plumbing ---

    def run(self, prop: str, fn: Callable[[], Verdict]) -> Verdict:
        token = channel_var.set(prop)
        started = time.perf_counter()
        try:
            verdict = fn()
        except CertificateError:
            logger.error("Certificate failed", extra={"data": {"ring": self.R.name, "channel": prop}})
            raise
        except FsingError as exc:
            logger.warning(
                "Channel inconclusive",
                extra={"data": {"ring": self.R.name, "channel": prop, "error": exc.detail}},
            )
            verdict = Verdict.inconclusive(prop, exc.detail, seed=self.seed)
        finally:
            channel_var.reset(token)
        if self.timings:
            verdict.wall_time = round(time.perf_counter() - started, 6)
        self.entries.append(verdict)
        self.results[verdict.property] = verdict
        return verdict

    def need_sop(self) -> ParameterSystem:
        if self.sop is None:
            raise ArgumentError("no certified system of parameters available")
        return self.sop

    def sample(self, channel: str, k: int) -> ParameterSystem:
        return sample_sop(
            self.R, self.seed, channel, k, self.budget["sop_max_degree"], self.budget["sop_max_tries"]
        )

    def get(self, prop: str) -> Optional[Verdict]:
        return self.results.get(prop)

    def alert(self, rule: str, properties: list[str], detail: str):
        logger.warning("Contradiction", extra={"data": {"ring": self.R.name, "rule": rule}})
        self.contradictions.append(Contradiction(rule=rule, properties=properties, detail=detail))

    # --- channels ---

    def cohen_macaulay(self) -> Verdict:
        self.sop = self.sample(Properties.COHEN_MACAULAY, 0)
        verdict = is_cohen_macaulay(self.R, self.sop)
        self.data["sop"] = self.sop.strings()
        return verdict.model_copy(update={"seed": self.seed})

    def multiplicity_check(self) -> Verdict:
        sop = self.need_sop()
        graded = multiplicity(self.R, sop)
        samuel = multiplicity_finite_difference(self.R, sop, self.budget["t_max"])
        if samuel.value is None:
            return Verdict.inconclusive(
                Properties.MULTIPLICITY,
                f"finite differences did not stabilize by t_max={self.budget['t_max']}",
                budget={"graded": graded, "lengths": samuel.lengths},
            )
        if samuel.value != graded:
            raise CertificateError(f"graded multiplicity {graded} differs from Samuel multiplicity {samuel.value}")
        return Verdict.proven(
            Properties.MULTIPLICITY,
            f"e = {graded} by the Hilbert series and by finite differences",
            witness={"graded": graded, "samuel": samuel.value, "lengths": samuel.lengths, "stable_from": samuel.stable_from},
        )

    def flc(self) -> Verdict:
        levels = []
        chosen = None
        for N in self.budget["deep_schedule"]:
            verdict = flc_evidence(self.R, self.budget["samples"], N, self.seed)
            levels.append({"N": N, "holds": verdict.holds})
            chosen = verdict
            if verdict.supports:
                break
        self.data["flc_levels"] = levels
        return chosen

    def constant(self) -> Verdict:
        self.C, verdict = buchsbaum_constant(self.R, self.budget["deep_schedule"], self.seed)
        return verdict

    def presentation(self, i: int) -> Callable[[], Verdict]:
        def fn() -> Verdict:
            pres = lc_presentation(self.R, self.need_sop(), i)
            self.presentations.append(pres)
            self.data.setdefault("local_cohomology", []).append(pres.summary())
            return f_injective_on_Hi(frobenius_action_matrix(self.R, pres))
        return fn

    def unmixed(self, i: int, k: int) -> Callable[[], Verdict]:
        def fn() -> Verdict:
            comparison = unmixed_denominator(self.R, self.need_sop(), i, k)
            payload = {"i": i, "k": k, "sop": self.need_sop().strings()}
            if comparison.agree:
                return Verdict.proven(
                    Properties.UNMIXED_DENOMINATOR, f"colon and sum presentations agree at i={i}, k={k}", witness=payload
                )
            extra = [g for g in comparison.right.gb if not comparison.left.contains(g)]
            extra = extra or [g for g in comparison.left.gb if not comparison.right.contains(g)]
            return Verdict.refuted(
                Properties.UNMIXED_DENOMINATOR,
                f"colon and sum presentations differ at i={i}, k={k}",
                witness={**payload, "y": extra[0]},
            )
        return fn

    def c_consistency(self) -> Verdict:
        n = self.R.dim
        lengths = {pres.index: pres.length for pres in self.presentations}
        if self.C is None:
            raise ArgumentError("buchsbaum constant unavailable")
        if any(i not in lengths for i in range(1, n)):
            raise ArgumentError("some presentation is missing")
        total = sum(comb(n - 1, i) * lengths[i] for i in range(1, n))
        budget = {"C": self.C, "sum": total, "lengths": {str(i): lengths[i] for i in range(1, n)}}
        if total == self.C:
            return Verdict.evidence(Properties.C_CONSISTENCY, f"binomial sum of lengths equals C = {self.C}", budget=budget)
        return Verdict.evidence(
            Properties.C_CONSISTENCY, f"binomial sum {total} differs from C = {self.C}", holds=False, budget=budget
        )

    def partial_checks(self) -> Callable[[], Verdict]:
        def fn() -> Verdict:
            sop = self.need_sop()
            last = None
            for t in range(1, len(sop)):
                last = partial_sop_closure_check(self.R, sop, t, self.e_max, self.budget["s_max"])
                if last.is_refuted:
                    return last
            if last is None:
                return Verdict.evidence(
                    Properties.PARTIAL_SOP_CLOSURE, "no proper partial system to test", budget={"dim": len(sop)}
                )
            return last
        return fn

    # --- combination ---

    def f_injective(self) -> Verdict:
        reduced = self.get(Properties.REDUCED)
        if reduced is not None and reduced.is_refuted:
            return Verdict.refuted(
                Properties.F_INJECTIVE, "not reduced", witness={"channel": Properties.REDUCED, **reduced.witness}
            )
        cm_test = self.get(Properties.CM_F_INJECTIVE)
        if cm_test is not None and cm_test.kind != VerdictKinds.INCONCLUSIVE:
            if cm_test.is_refuted:
                return Verdict.refuted(
                    Properties.F_INJECTIVE, cm_test.claim, witness={"channel": Properties.CM_F_INJECTIVE, **cm_test.witness}
                )
            return Verdict.evidence(Properties.F_INJECTIVE, cm_test.claim, budget=cm_test.budget)
        for matrix in self.matrices:
            if matrix.is_refuted:
                return Verdict.refuted(
                    Properties.F_INJECTIVE,
                    matrix.claim,
                    witness={"channel": Properties.F_INJECTIVE_MATRIX, **matrix.witness},
                    conditional_on=STANDARDNESS,
                )
        flc = self.get(Properties.FLC)
        closure = self.get(Properties.SOP_CLOSURE)
        if closure is not None and closure.is_refuted:
            if flc is not None and flc.supports:
                return Verdict.refuted(
                    Properties.F_INJECTIVE,
                    "a parameter ideal is not Frobenius closed",
                    witness={"channel": Properties.SOP_CLOSURE, **closure.witness},
                    seed=self.seed,
                    conditional_on=FLC_CONDITION,
                )
            return Verdict.inconclusive(
                Properties.F_INJECTIVE,
                "a parameter ideal is not Frobenius closed but finite local cohomology is not supported",
                seed=self.seed,
            )
        conditional = None
        if reduced is not None and reduced.kind == VerdictKinds.INCONCLUSIVE:
            conditional = "reducedness (assumed)"
        channels = [v.property for v in self.entries if v.supports]
        if self.matrices and all(m.is_proven for m in self.matrices):
            return Verdict.evidence(
                Properties.F_INJECTIVE,
                "Frobenius is injective below the top; the top is covered by closure sampling",
                seed=self.seed,
                budget={"channels": channels},
                conditional_on=STANDARDNESS,
            )
        return Verdict.evidence(
            Properties.F_INJECTIVE,
            "no channel found a witness",
            seed=self.seed,
            budget={"channels": channels},
            conditional_on=conditional,
        )

    def check_contradictions(self):
        get = self.get
        refuted = lambda prop: get(prop) is not None and get(prop).is_refuted
        supports = lambda prop: get(prop) is not None and get(prop).supports

        fedder = get(Properties.F_PURE)
        if fedder is not None and fedder.is_proven:
            for prop in (
                Properties.CM_F_INJECTIVE,
                Properties.SOP_CLOSURE,
                Properties.PARTIAL_SOP_CLOSURE,
                Properties.TOP_COHOMOLOGY,
            ):
                if refuted(prop):
                    self.alert(
                        ContradictionRules.FEDDER_CLOSURE,
                        [Properties.F_PURE, prop],
                        "F-pure rings have every ideal Frobenius closed",
                    )
            if any(m.is_refuted for m in self.matrices):
                self.alert(
                    ContradictionRules.FEDDER_MATRIX,
                    [Properties.F_PURE, Properties.F_INJECTIVE_MATRIX],
                    "F-pure rings are F-injective",
                )

        all_matrices = bool(self.matrices) and all(m.is_proven for m in self.matrices)
        if (
            all_matrices
            and supports(Properties.FLC)
            and supports(Properties.TOP_COHOMOLOGY)
            and refuted(Properties.SOP_CLOSURE)
        ):
            self.alert(
                ContradictionRules.MATRIX_CLOSURE,
                [Properties.F_INJECTIVE_MATRIX, Properties.TOP_COHOMOLOGY, Properties.SOP_CLOSURE],
                "injective Frobenius action yet a parameter ideal is not closed",
            )

        if supports(Properties.FLC) and supports(Properties.SOP_CLOSURE) and refuted(Properties.BUCHSBAUM):
            self.alert(
                ContradictionRules.FLC_CLOSED_BUCHSBAUM,
                [Properties.FLC, Properties.SOP_CLOSURE, Properties.BUCHSBAUM],
                "finite local cohomology with closed parameter ideals forces Buchsbaum",
            )

        if supports(Properties.SOP_CLOSURE) and refuted(Properties.PARTIAL_SOP_CLOSURE):
            self.alert(
                ContradictionRules.PARTIAL_CLOSURE,
                [Properties.SOP_CLOSURE, Properties.PARTIAL_SOP_CLOSURE],
                "part of a closed system of parameters generates a closed ideal",
            )

        consistency = get(Properties.C_CONSISTENCY)
        if consistency is not None and consistency.kind == VerdictKinds.EVIDENCE and consistency.holds is False:
            self.alert(
                ContradictionRules.C_CONSISTENCY,
                [Properties.C_CONSISTENCY, Properties.BUCHSBAUM_CONSTANT],
                consistency.claim,
            )

        buchsbaum = get(Properties.BUCHSBAUM)
        if self.C is not None and supports(Properties.FLC) and buchsbaum is not None and buchsbaum.budget:
            worst = max(buchsbaum.budget.get("deltas") or [0])
            if worst > self.C:
                self.alert(
                    ContradictionRules.DELTA_BOUND,
                    [Properties.DELTA_CONSTANCY, Properties.BUCHSBAUM_CONSTANT],
                    f"length minus multiplicity {worst} exceeds C = {self.C}",
                )

        if all_matrices and len(self.matrices) == max(self.R.dim, 1):
            spread = sorted({d for pres in self.presentations for d in pres.internal_profile() if d != 0})
            if spread:
                self.alert(
                    ContradictionRules.GRADED_WINDOW,
                    [Properties.F_INJECTIVE_MATRIX, Properties.GRADED_WINDOW],
                    f"injective Frobenius action but local cohomology lives in degrees {spread}",
                )

        cm = get(Properties.COHEN_MACAULAY)
        if cm is not None and cm.is_proven:
            nonzero = [pres.index for pres in self.presentations if 1 <= pres.index and pres.length]
            if nonzero:
                self.alert(
                    ContradictionRules.CM_COHOMOLOGY,
                    [Properties.COHEN_MACAULAY, Properties.F_INJECTIVE_MATRIX],
                    f"Cohen-Macaulay ring with nonzero local cohomology at {nonzero}",
                )

        if supports(Properties.BUCHSBAUM) and any(
            v.property == Properties.UNMIXED_DENOMINATOR and v.is_refuted for v in self.entries
        ):
            self.alert(
                ContradictionRules.UNMIXED,
                [Properties.BUCHSBAUM, Properties.UNMIXED_DENOMINATOR],
                "colon and sum presentations must agree in Buchsbaum rings",
            )

    # --- driver ---

    def execute(self) -> "Pipeline":
        R = self.R
        n = R.dim
        logger.info("Classification started", extra={"data": {"ring": R.name, "dim": n, "full": self.full}})
        self.run(Properties.REDUCED, lambda: reducedness_screen(R))
        if self.full:
            self.run(Properties.F_PURE, lambda: fedder_f_pure(R))
        cm = self.run(Properties.COHEN_MACAULAY, self.cohen_macaulay)
        if self.full:
            self.run(Properties.MULTIPLICITY, self.multiplicity_check)
        self.run(Properties.FLC, self.flc)
        buchsbaum = self.run(Properties.BUCHSBAUM, lambda: buchsbaum_verdict(R, self.budget))

        if buchsbaum.supports:
            if self.full:
                self.run(Properties.BUCHSBAUM_CONSTANT, self.constant)
            for i in range(max(n, 1)):
                self.matrices.append(self.run(Properties.F_INJECTIVE_MATRIX, self.presentation(i)))
            if self.full:
                for i in range(1, n):
                    for k in self.budget["unmixed_k"]:
                        self.run(Properties.UNMIXED_DENOMINATOR, self.unmixed(i, k))
                self.run(Properties.C_CONSISTENCY, self.c_consistency)
                self.run(Properties.GRADED_WINDOW, lambda: graded_window(self.presentations))

        self.run(
            Properties.SOP_CLOSURE,
            lambda: sop_closure_sampling(
                R, {"samples": self.budget["samples"]}, self.e_max, self.seed
            ),
        )
        self.run(Properties.TOP_COHOMOLOGY, lambda: top_cohomology_evidence(R, self.need_sop(), self.e_max))
        if self.full:
            self.run(Properties.PARTIAL_SOP_CLOSURE, self.partial_checks())
        if cm.is_proven:
            self.run(Properties.CM_F_INJECTIVE, lambda: cm_finjective_test(R, self.need_sop(), self.e_max, cm))

        self.run(Properties.F_INJECTIVE, self.f_injective)
        self.check_contradictions()
        if self.C is not None:
            self.data["C"] = self.C
        logger.info(
            "Classification finished",
            extra={"data": {"ring": R.name, "entries": len(self.entries), "contradictions": len(self.contradictions)}},
        )
        return self

    def report(self, command: str, headline: str = Properties.F_INJECTIVE) -> Report:
        return Report(
            command=command,
            ring=RingEcho(**self.R.echo()),
            seed=self.seed,
            budget=self.budget,
            headline=headline,
            entries=self.entries,
            contradictions=self.contradictions,
            data=self.data,
        )


def classify(R: RingPresentation, budget: Optional[dict] = None, timings: bool = False) -> Report:
    return Pipeline(R, budget, full=True, timings=timings).execute().report("classify")


def finjective(R: RingPresentation, budget: Optional[dict] = None, timings: bool = False) -> Report:
    """The channels that decide F-injectivity, without Fedder and the bookkeeping checks."""
    return Pipeline(R, budget, full=False, timings=timings).execute().report("finjective")
