from pydantic import BaseModel, Field, field_serializer
from typing import Optional, List, Dict, Any

from models.verdict import Verdict, to_jsonable

FORMAT_VERSION = "1.0"
TOOL_VERSION = "0.3.0"


class RingEcho(BaseModel):
    """Normalized presentation: generators printed in the polynomial grammar."""
    name: str
    p: int
    variables: List[str]
    weights: List[int]
    generators: List[str]
    dim: int


class Contradiction(BaseModel):
    rule: str
    properties: List[str]
    detail: str


class Candidate(BaseModel):
    name: str
    ring: RingEcho
    reasons: List[str]
    command: str


class Report(BaseModel):
    format_version: str = FORMAT_VERSION
    tool_version: str = TOOL_VERSION
    command: str
    ring: Optional[RingEcho] = None
    seed: int = 0
    budget: Dict[str, Any] = Field(default_factory=dict)
    headline: Optional[str] = None      # property whose verdict drives the exit code
    entries: List[Verdict] = Field(default_factory=list)
    contradictions: List[Contradiction] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    candidates: List[Candidate] = Field(default_factory=list)
    rings: List["Report"] = Field(default_factory=list)   # report <dir> aggregates

    @field_serializer("data")
    def serialize_data(self, value):
        return to_jsonable(value)

    def entry(self, prop: str) -> Optional[Verdict]:
        """Last verdict recorded for a property."""
        for verdict in reversed(self.entries):
            if verdict.property == prop:
                return verdict
        return None

    def headline_verdict(self) -> Optional[Verdict]:
        return self.entry(self.headline) if self.headline else None

    def all_contradictions(self) -> List[Contradiction]:
        found = list(self.contradictions)
        for child in self.rings:
            found.extend(child.all_contradictions())
        return found

    def any_refuted_headline(self) -> bool:
        verdict = self.headline_verdict()
        if verdict is not None and verdict.is_refuted:
            return True
        return any(child.any_refuted_headline() for child in self.rings)


Report.model_rebuild()
