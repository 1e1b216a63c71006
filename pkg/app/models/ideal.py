from pydantic import BaseModel, Field
from typing import List, Literal, Optional

from app.models.algebra import Coordinates


# Modelos de Request
class IdealRequest(BaseModel):
    algebra: str = Field(..., min_length=1)
    char: int = Field(..., ge=0)
    gens: Optional[str] = None
    coords: Optional[str] = None


class SimplicityRequest(BaseModel):
    algebra: str = Field(..., min_length=1)
    char: int = Field(..., ge=0)
    cap: Optional[int] = Field(None, gt=0)


# Modelos de Response
class TraceEntryResponse(BaseModel):
    depth: int
    dimension: int
    spanning_set: List[Coordinates]
    text: str


class IdealResponse(BaseModel):
    generators: List[str]
    basis: List[Coordinates]
    basis_text: List[str]
    dimension: int


class SimplicityResponse(BaseModel):
    verdict: Literal["simple", "not_simple", "inconclusive"]
    reason: str
    candidates_tested: int
    witness: Optional[IdealResponse] = None
    witness_generator: Optional[Coordinates] = None
    derived_dimension: Optional[int] = None
    center: List[Coordinates] = []
