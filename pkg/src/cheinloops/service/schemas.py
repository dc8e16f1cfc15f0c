"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class GroupInfoRequest(BaseModel):
    group: str


class GroupInfoResponse(BaseModel):
    group: str
    order: int
    abelian: bool
    elementary_abelian_2: bool
    center_index: int


class ConstructRequest(BaseModel):
    group: str
    matrix: str = "M_c"


class ConstructResponse(BaseModel):
    group: str
    matrix: str
    order: int
    table_text: str
    sidecar: dict


class CheckRequest(BaseModel):
    table_text: str
    law: str | None = None
    identity: str | None = None


class CounterexampleModel(BaseModel):
    assignment: list[tuple[str, int]]
    lhs: int
    rhs: int


class CheckResponse(BaseModel):
    holds: bool
    identity: str
    counterexample: CounterexampleModel | None = None


class EnumerateRequest(BaseModel):
    group: str
    jobs: int = Field(default=1, ge=1, le=64)
    include_csv: bool = False


class EnumerateResponse(BaseModel):
    report: dict
    csv: str | None = None
    all_checks_pass: bool


class VerifyRequest(BaseModel):
    group: str
    jobs: int = Field(default=1, ge=1, le=64)


class VerifyResponse(BaseModel):
    passed: bool
    verdict: dict


class IsoRequest(BaseModel):
    table_a_text: str
    table_b_text: str
    anti: bool = False


class IsoResponse(BaseModel):
    found: bool
    map: list[int] | None = None
