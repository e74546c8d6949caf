"""Pydantic request/response models shared by the HTTP API and the CLI."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

from ..combinatorics import MAX_DIM


class ElementSelector(BaseModel):
    """Parameters picking one C^m degree-k element family member."""

    n: int = Field(ge=1, le=MAX_DIM, description="spatial dimension")
    m: int = Field(ge=1, description="smoothness order")
    k1: int = Field(ge=0, description="excess degree above 2^n m + 1")


class GenerateRequest(ElementSelector):
    format: Literal["paper", "json", "csv"] = "paper"
    debug_face_checks: bool = False


class GenerateResponse(BaseModel):
    text: str | None = None
    table: dict[str, Any] | None = None


class PerLevelCount(BaseModel):
    level: int
    per_entity: int
    total: int


class VerifyRequest(ElementSelector):
    n: int = Field(ge=2, le=4)


class VerifyResponse(BaseModel):
    passed: bool
    grand_total: int
    dim_pk: int
    per_level: list[PerLevelCount]
    mismatches: list[str]


class UnisolvencyRequest(ElementSelector):
    n: int = Field(ge=2, le=4)
    tol: float = 1e-8


class UnisolvencyResponse(BaseModel):
    passed: bool
    residual: float
    condition_estimate: float
    size: int


class ContinuityRequest(ElementSelector):
    n: int = Field(ge=2, le=4)
    seed: int = 0
    tol: float = 1e-7
    samples: int = Field(default=20, ge=20)


class OrderJump(BaseModel):
    order: int
    jump: float
    scale: float
    relative: float


class ContinuityResponse(BaseModel):
    passed: bool
    shared_dofs: int
    per_order: list[OrderJump]


class SweepRequest(BaseModel):
    n_max: int = Field(default=4, ge=2, le=4)
    m_max: int = Field(default=4, ge=1)
    k1_max: int = Field(default=2, ge=0)
    m_max_4d: int = Field(default=2, ge=1)


class SweepCase(BaseModel):
    n: int
    m: int
    k1: int
    passed: bool
    detail: str


class SweepResponse(BaseModel):
    passed: bool
    cases: list[SweepCase]
