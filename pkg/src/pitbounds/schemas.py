"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class FieldRequest(BaseModel):
    delta: int = Field(ge=9, description="absolute discriminant of the field")
    r2: int = Field(default=1, ge=1, description="half the field degree")
    nf: int = Field(default=1, ge=1, description="conductor norm")
    hstar: int = Field(default=1, ge=1, description="ideal class number mod the conductor")
    eta: float = Field(default=0.25, gt=0.0, le=0.25)
    w: float = Field(default=58.0, ge=1.0, lt=58.5735849)


class MinLogXModel(BaseModel):
    printed: float
    substitution_floor: float
    effective: float


class ThresholdRequest(FieldRequest):
    eps: float = Field(gt=0.0, lt=1.0)
    c1_mode: Literal["printed", "derived"] = "printed"


class ThresholdResponse(BaseModel):
    delta: int
    r2: int
    nf: int
    hstar: int
    eps: float
    c1_printed: float
    c1_derived: float
    u_printed: float
    u_rigorous: float
    log_x_printed: float
    log_x_rigorous: float
    min_log_x: MinLogXModel


class BoundsRequest(FieldRequest):
    log_x: float = Field(gt=0.0)


class BoundsResponse(BaseModel):
    delta: int
    r2: int
    nf: int
    hstar: int
    log_x: float
    c2: float
    c3: float
    min_log_x: MinLogXModel
    valid_at_log_x: bool
    rel_lower: Optional[float] = None
    rel_upper: Optional[float] = None
    lower_over_main: Optional[float] = None
    upper_over_main: Optional[float] = None


class LedgerRequest(FieldRequest):
    e0: int = Field(default=0, ge=0, le=1)
    eps_chi: int = Field(default=0, ge=0, le=1)
    log_x: Optional[float] = Field(default=None, gt=0.0)


class LedgerEntryModel(BaseModel):
    name: str
    derived: float
    printed: Optional[float] = None
    gap: Optional[float] = None
    location: str = ""
    flag: Optional[str] = None
    note: Optional[str] = None
    value_at_params: Optional[float] = None


class LedgerResponse(BaseModel):
    delta: int
    r2: int
    nf: int
    hstar: int
    e0: int
    eps_chi: int
    eta: float
    w: float
    log_x: float
    entries: list[LedgerEntryModel]
    flagged: list[str]


class VerifyRequest(BaseModel):
    grid: Optional[dict] = Field(default=None, description="inline grid; default grid if omitted")
    rel_err: float = Field(default=1e-8, gt=0.0, le=1e-4)


class ReportModel(BaseModel):
    check_name: str
    parameters: dict
    bound_value: float
    measured_value: float
    slack: float
    passed: bool


class VerifyResponse(BaseModel):
    total: int
    failures: int
    all_passed: bool
    reports: list[ReportModel]


class PsiRequest(BaseModel):
    d: int = Field(lt=0, description="squarefree negative field parameter")
    n: int = Field(default=1, ge=1, description="conductor generator")
    x: float = Field(ge=2.0)


class PsiRowModel(BaseModel):
    x: float
    class_index: Optional[int] = None
    psi: float
    reference: float
    ratio: float
    lower_bound: Optional[float] = None
    upper_bound: Optional[float] = None


class PsiResponse(BaseModel):
    d: int
    n: int
    x: float
    hstar: int
    bounds_applicable: bool
    skipped: float
    rows: list[PsiRowModel]


class LogderivRequest(BaseModel):
    d: int = Field(lt=0)
    sigma: float = Field(default=1.5, ge=1.5)
    t: float = 0.0
    x_cut: float = Field(default=1e6, ge=1e3)
    ref_delta: int = Field(
        default=9,
        ge=9,
        description="reference discriminant for the comparison majorant",
    )


class LogderivResponse(BaseModel):
    d: int
    sigma: float
    t: float
    x_cut: float
    value_re: float
    value_im: float
    combined_abs: float
    tail_bound: float
    majorant: float
    slack_factor: float


class CmVerifyRequest(BaseModel):
    p: int
    q: int
    t: int
    f: int
    delta: int


class CmVerifyResponse(BaseModel):
    p: int
    q: int
    t: int
    f: int
    delta: int
    valid: bool
    failure_reason: Optional[str] = None


class CmSearchRequest(BaseModel):
    delta: int = Field(lt=0)
    p_min: int = Field(default=2, ge=2)
    p_max: int = Field(ge=2)
    q_min: int = Field(default=2, ge=2)
    limit: Optional[int] = Field(default=None, ge=1)


class CmCandidateModel(BaseModel):
    p: int
    q: int
    t: int
    f: int
    delta: int


class CmSearchResponse(BaseModel):
    delta: int
    p_min: int
    p_max: int
    q_min: int
    count: int
    candidates: list[CmCandidateModel]


class HealthResponse(BaseModel):
    status: str
    name: str
    version: str
