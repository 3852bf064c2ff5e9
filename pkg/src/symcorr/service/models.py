"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class SymbolsEnumerateRequest(BaseModel):
    rho: int = Field(ge=0)
    s: int = Field(ge=0)
    n: int
    defects: Literal["even", "odd", "odd-positive"]
    classes: bool = False


class SymbolRecord(BaseModel):
    symbol: str
    n: int
    defect: int


class ParamsRecord(BaseModel):
    rho: int
    s: int
    defects: str


class IntervalRecord(BaseModel):
    entries: List[int]
    proper: bool


class ClassRecord(BaseModel):
    params: ParamsRecord
    n: int
    members: List[str]
    intervals: List[IntervalRecord]
    dim: int


class SymbolsEnumerateResponse(BaseModel):
    symbols: Optional[List[SymbolRecord]] = None
    classes: Optional[List[ClassRecord]] = None


class SpringerMapRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    case: Literal["sp", "o-outer", "a-odd", "a-even"]
    n: int = Field(ge=0)
    class_text: str = Field(alias="class")
    char: str = ""


class SpringerTableRequest(BaseModel):
    case: Literal["sp", "o-outer", "a-odd", "a-even"]
    n: int = Field(ge=0)


class MappingRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    case: str
    n: int
    class_text: str = Field(alias="class", serialization_alias="class")
    char: str
    symbol: str
    defect: int
    bipartition: str


class SpringerTableResponse(BaseModel):
    mappings: List[MappingRecord]


class SpinMapRequest(BaseModel):
    n: int = Field(ge=0)
    partition: str


class SpinTableRequest(BaseModel):
    n: int = Field(ge=0)


class SpinRecord(BaseModel):
    n: int
    partition: str
    t: int
    alpha: str
    beta: str
    bipartition: str
    weyl_rank: int


class SpinTableResponse(BaseModel):
    mappings: List[SpinRecord]


class CountRequest(BaseModel):
    family: Literal["a", "d", "sporadic"]
    m: int = Field(ge=0)


class CensusRecord(BaseModel):
    family: str
    m: int
    formula_count: int
    enumeration_count: Optional[int]
    agree: bool


class CountResponse(BaseModel):
    reports: List[CensusRecord]


class SelftestRequest(BaseModel):
    max_n: int = Field(default=6, ge=0, le=10)


class CheckRecord(BaseModel):
    name: str
    ok: bool
    detail: str


class SelftestResponse(BaseModel):
    ok: bool
    checks: List[CheckRecord]


class HealthResponse(BaseModel):
    status: str
