from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Optional, List, Dict, Any, Literal

from constants import Families

FamilyName = Literal["squarefree-monomial", "binomial", "hypersurface"]
GENERATOR_PRIMES = (2, 3, 5)


class FixtureRing(BaseModel):
    name: str
    p: int
    variables: List[str]
    weights: Optional[List[int]] = None
    generators: List[str] = Field(default_factory=list)
    expected: Dict[str, Any] = Field(default_factory=dict)
    provenance: Dict[str, str] = Field(default_factory=dict)   # oracle behind each expectation

    @model_validator(mode="after")
    def every_expectation_has_an_oracle(self):
        missing = sorted(set(self.expected) - set(self.provenance))
        if missing:
            raise ValueError(f"expectations without provenance: {missing}")
        return self


class RingGenerator(BaseModel):
    family: FamilyName = Families.SQUAREFREE_MONOMIAL
    max_vars: int = Field(default=4, ge=2, le=5)
    max_degree: int = Field(default=3, ge=2, le=4)
    primes: List[int] = Field(default_factory=lambda: list(GENERATOR_PRIMES))
    seed: int = Field(default=0, ge=0)

    @field_validator("primes")
    @classmethod
    def small_primes_only(cls, v):
        if not v or any(p not in GENERATOR_PRIMES for p in v):
            raise ValueError(f"primes must be a non-empty subset of {list(GENERATOR_PRIMES)}")
        return v
