from pydantic import BaseModel, Field, ConfigDict, field_serializer, model_validator
from typing import Optional, Literal, Any, Dict, List

from constants import VerdictKinds

VerdictKind = Literal["proven", "refuted", "evidence", "inconclusive"]


def to_jsonable(value: Any) -> Any:
    """Polynomials and ideals become strings in the polynomial grammar; containers recurse."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "generators"):
        return [str(g) for g in value.generators]
    return str(value)


class Verdict(BaseModel):
    property: str
    kind: VerdictKind
    holds: Optional[bool] = None     # direction of the claim; for evidence: True = supports the property
    claim: str = ""
    witness: Optional[Dict[str, Any]] = None   # finitely re-checkable payload (Refuted, Proven certificates)
    budget: Optional[Dict[str, Any]] = None    # sampling budget and effective limits (Evidence)
    seed: Optional[int] = None
    reason: Optional[str] = None     # why a run was inconclusive
    conditional_on: Optional[str] = None
    wall_time: Optional[float] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_kind_payload(self):
        if self.kind == VerdictKinds.REFUTED and self.witness is None:
            raise ValueError("refuted verdicts carry a witness")
        if self.kind == VerdictKinds.INCONCLUSIVE and not self.reason:
            raise ValueError("inconclusive verdicts carry a reason")
        return self

    @field_serializer("witness", "budget")
    def serialize_payload(self, value):
        return to_jsonable(value)

    @classmethod
    def proven(cls, prop: str, claim: str, holds: bool = True, **kwargs) -> "Verdict":
        return cls(property=prop, kind=VerdictKinds.PROVEN, holds=holds, claim=claim, **kwargs)

    @classmethod
    def refuted(cls, prop: str, claim: str, witness: Dict[str, Any], **kwargs) -> "Verdict":
        return cls(property=prop, kind=VerdictKinds.REFUTED, holds=False, claim=claim, witness=witness, **kwargs)

    @classmethod
    def evidence(cls, prop: str, claim: str, holds: bool = True, **kwargs) -> "Verdict":
        return cls(property=prop, kind=VerdictKinds.EVIDENCE, holds=holds, claim=claim, **kwargs)

    @classmethod
    def inconclusive(cls, prop: str, reason: str, **kwargs) -> "Verdict":
        return cls(property=prop, kind=VerdictKinds.INCONCLUSIVE, reason=reason, **kwargs)

    @property
    def is_refuted(self) -> bool:
        return self.kind == VerdictKinds.REFUTED

    @property
    def is_proven(self) -> bool:
        return self.kind == VerdictKinds.PROVEN

    @property
    def supports(self) -> bool:
        """Proven-true or evidence in favour."""
        return self.kind in (VerdictKinds.PROVEN, VerdictKinds.EVIDENCE) and self.holds is True


class DSequenceResult(BaseModel):
    passed: bool
    sequence: List[Any] = Field(default_factory=list)
    i: Optional[int] = None
    j: Optional[int] = None
    witness: Optional[Any] = None   # y with y*x_i*x_j in (x_1..x_{i-1}) but y*x_j not

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @field_serializer("sequence", "witness")
    def serialize_polys(self, value):
        return to_jsonable(value)
