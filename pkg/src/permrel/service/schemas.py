"""Request and response bodies for the HTTP service.

Words travel as display strings ("2 3 1", with ε for the empty word);
permutation sets travel as the same specifications the library accepts
("cyclic", "sym", "trivial", or semicolon-separated generators).
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from ..congruence import DEFAULT_BUDGET


class HealthResponse(BaseModel):
    status: str
    version: str


class WordRequest(BaseModel):
    n: int = Field(ge=3)
    word: str = ""


class PairRequest(BaseModel):
    n: int = Field(ge=3)
    left: str = ""
    right: str = ""


class NormalFormResponse(BaseModel):
    n: int
    input: str
    normal_form: str
    steps: int
    ones: int
    central: int
    ascents: int
    tail: str
    in_p: bool


class EqualResponse(BaseModel):
    n: int
    equal: bool
    left_normal: str
    right_normal: str


class GroupElementResponse(BaseModel):
    n: int
    input: str
    syllables: list[list[int]]
    c: int
    rendered: str


class GrowthRequest(BaseModel):
    n: int = Field(ge=2)
    h: str = "cyclic"
    max_length: int = Field(default=5, ge=0)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class GrowthResponse(BaseModel):
    n: int
    h: str
    counts: list[int]


class SeriesRequest(BaseModel):
    n: int = Field(ge=3)
    max_length: int = Field(default=6, ge=0)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class SeriesRowModel(BaseModel):
    length: int
    normal_forms: int
    avoiding: int
    explorer_classes: Optional[int]
    explorer_singletons: Optional[int]
    consistent: bool


class SeriesResponse(BaseModel):
    n: int
    consistent: bool
    rows: list[SeriesRowModel]


class ConfluenceRequest(BaseModel):
    n: int = Field(ge=3)
    max_m: int = Field(default=5, ge=2)
    include_illegal: bool = False


class ConfluenceResponse(BaseModel):
    n: int
    max_m: int
    include_illegal: bool
    total: int
    case_counts: dict[str, int]
    joinable: int
    malformed: int
    all_joinable: bool
    max_left_path: int
    max_right_path: int
    counterexample: Optional[str]


class ExploreRequest(BaseModel):
    n: int = Field(ge=2)
    h: str = "cyclic"
    length: int = Field(default=3, ge=0)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
    sample: int = Field(default=0, ge=0, le=1000)


class ClassSample(BaseModel):
    representative: str
    size: int


class ExploreResponse(BaseModel):
    n: int
    h: str
    length: int
    class_count: int
    singleton_count: int
    classes: list[ClassSample]


class ReduceRequest(BaseModel):
    n: int = Field(ge=2)
    h: str = "sym"


class ReduceResponse(BaseModel):
    n: int
    h: str
    group_order: int
    stabilizer_order: int
    free: bool
    relation_count: int
    relations: list[str]
    reduced_degree: int


class RhoRequest(BaseModel):
    n: int = Field(ge=2)
    h: str = "sym"
    length: int = Field(default=2, ge=0)
    power: int = Field(default=1, ge=0)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class RhoResponse(BaseModel):
    n: int
    h: str
    length: int
    power: int
    class_count: int
    plain_class_count: int


class SymIdentityRequest(BaseModel):
    n: int = Field(ge=2)
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    h: Optional[str] = None
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class SymIdentityResponse(BaseModel):
    n: int
    i: int
    j: int
    h: str
    holds: bool
