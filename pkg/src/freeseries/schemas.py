"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class IndexedLetter(BaseModel):
    name: str
    row: int = Field(ge=1)
    col: int = Field(ge=1)


class TermModel(BaseModel):
    word: list[str | IndexedLetter]
    coefficient: str


class FamilyRequest(BaseModel):
    family: Literal["d", "c", "u", "t"]
    n: int = Field(ge=1)
    x: Literal["keep", "comm", "one"] = "keep"
    zero_diag: bool = False


class FamilyResponse(BaseModel):
    family: str
    n: int
    x: str
    zero_diag: bool
    degree: int
    monomial_count: int
    canonical: str
    terms: list[TermModel]


class WitnessModel(BaseModel):
    degree: int
    word: str
    expected: str
    actual: str


class ReportModel(BaseModel):
    name: str
    passed: bool
    witness: WitnessModel | None = None
    elapsed: float


class VerifyRequest(BaseModel):
    suite: Literal[
        "theorem1",
        "eq2",
        "eq3-sec2",
        "theorem4",
        "remark5",
        "extraction",
        "involution",
        "dyck",
        "quasidet",
        "all",
    ]
    degree: int = Field(default=8, ge=0)


class VerifyResponse(BaseModel):
    suite: str
    degree: int
    passed: bool
    reports: list[ReportModel]


class CountsRequest(BaseModel):
    family: Literal["d", "u", "t"]
    n_max: int = Field(default=5, ge=1)
    zero_diag: bool = False


class CountRowModel(BaseModel):
    n: int
    count: int
    expected: int
    match: bool


class CountsResponse(BaseModel):
    family: str
    n_max: int
    zero_diag: bool
    all_match: bool
    rows: list[CountRowModel]


class HealthResponse(BaseModel):
    status: str
