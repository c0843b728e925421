"""HTTP surface over the core package.

Each endpoint is a thin wrapper over a handler function operating on the
pydantic models from ``schemas``; the CLI calls the same handlers in
process, so the two surfaces cannot drift apart.

Run with:  uvicorn pitbounds.service:app
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .bounds import (
    ZetaContext,
    build_ledger,
    epsilon_threshold,
    majorant_principal,
    min_log_x,
    psi_envelope_rel,
    psi_error_coefficients,
    window_error_coefficient,
)
from .checks import default_grid, run_grid
from .cm import CMCandidate, search_cm_pairs, verify_cm_pair
from .errors import ParameterError, QuadratureError, ResourceLimitError
from .fields import CharacterKind, FieldParameters
from .ideals import QuadraticField, logderiv_empirical, psi_by_class, ray_class_group
from .schemas import (
    BoundsRequest,
    BoundsResponse,
    CmSearchRequest,
    CmSearchResponse,
    CmVerifyRequest,
    CmVerifyResponse,
    CmCandidateModel,
    HealthResponse,
    LedgerEntryModel,
    LedgerRequest,
    LedgerResponse,
    LogderivRequest,
    LogderivResponse,
    MinLogXModel,
    PsiRequest,
    PsiResponse,
    PsiRowModel,
    ReportModel,
    ThresholdRequest,
    ThresholdResponse,
    VerifyRequest,
    VerifyResponse,
)

THRESHOLD_EPS_SCALE = 0.117
LOWER_DECAY = 0.0432


def _params(req) -> FieldParameters:
    return FieldParameters(req.delta, req.r2, req.nf, req.hstar)


def _ctx(req, kind: CharacterKind = CharacterKind(0, 0)) -> ZetaContext:
    return ZetaContext(eta=req.eta, w=req.w, kind=kind)


def handle_threshold(req: ThresholdRequest) -> ThresholdResponse:
    params = _params(req)
    ctx = _ctx(req)
    c1_printed = window_error_coefficient(params, "printed")
    c1_derived = window_error_coefficient(params, "derived")
    c1 = c1_printed if req.c1_mode == "printed" else c1_derived
    scaled = c1 * math.sqrt(params.r2) / req.eps
    mlx = min_log_x(params, ctx)
    return ThresholdResponse(
        delta=req.delta,
        r2=req.r2,
        nf=req.nf,
        hstar=req.hstar,
        eps=req.eps,
        c1_printed=c1_printed,
        c1_derived=c1_derived,
        u_printed=math.log(scaled / THRESHOLD_EPS_SCALE),
        u_rigorous=math.log(scaled / (LOWER_DECAY * math.e)),
        log_x_printed=epsilon_threshold(req.eps, params, "printed", req.c1_mode),
        log_x_rigorous=epsilon_threshold(req.eps, params, "rigorous", req.c1_mode),
        min_log_x=MinLogXModel(
            printed=mlx.printed,
            substitution_floor=mlx.substitution_floor,
            effective=mlx.effective,
        ),
    )


def handle_bounds(req: BoundsRequest) -> BoundsResponse:
    params = _params(req)
    ctx = _ctx(req)
    c2, c3 = psi_error_coefficients(params)
    mlx = min_log_x(params, ctx)
    valid = req.log_x >= mlx.effective
    rel_lower = rel_upper = lower = upper = None
    if valid:
        rel_lower, rel_upper = psi_envelope_rel(req.log_x, params, ctx)
        lower, upper = 1.0 - rel_lower, 1.0 + rel_upper
    return BoundsResponse(
        delta=req.delta,
        r2=req.r2,
        nf=req.nf,
        hstar=req.hstar,
        log_x=req.log_x,
        c2=c2,
        c3=c3,
        min_log_x=MinLogXModel(
            printed=mlx.printed,
            substitution_floor=mlx.substitution_floor,
            effective=mlx.effective,
        ),
        valid_at_log_x=valid,
        rel_lower=rel_lower,
        rel_upper=rel_upper,
        lower_over_main=lower,
        upper_over_main=upper,
    )


def handle_ledger(req: LedgerRequest) -> LedgerResponse:
    params = _params(req)
    ctx = _ctx(req, CharacterKind(req.e0, req.eps_chi))
    ledger = build_ledger(params, ctx, req.log_x)
    return LedgerResponse(
        delta=req.delta,
        r2=req.r2,
        nf=req.nf,
        hstar=req.hstar,
        e0=req.e0,
        eps_chi=req.eps_chi,
        eta=req.eta,
        w=req.w,
        log_x=ledger.log_x,
        entries=[LedgerEntryModel(**e.to_dict()) for e in ledger.entries],
        flagged=[e.name for e in ledger.flagged()],
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    grid = req.grid if req.grid is not None else default_grid()
    reports = run_grid(grid, req.rel_err)
    failures = sum(1 for r in reports if not r.passed)
    return VerifyResponse(
        total=len(reports),
        failures=failures,
        all_passed=failures == 0,
        reports=[ReportModel(**r.to_dict()) for r in reports],
    )


def handle_psi(req: PsiRequest) -> PsiResponse:
    field = QuadraticField(req.d)
    group = ray_class_group(req.d, req.n)
    data = psi_by_class([req.x], field, req.n)[req.x]
    hstar = group.h_star
    reference = req.x / hstar
    rows = [
        PsiRowModel(
            x=req.x,
            class_index=c,
            psi=value,
            reference=reference,
            ratio=value / reference,
        )
        for c, value in enumerate(data["classes"])
    ]
    rows.append(
        PsiRowModel(
            x=req.x,
            class_index=None,
            psi=data["total"],
            reference=req.x,
            ratio=data["total"] / req.x,
        )
    )
    # The explicit bounds only kick in at log x in the hundreds; at any
    # float-representable x they are never applicable, so the bound columns
    # stay empty (reported via bounds_applicable).
    return PsiResponse(
        d=req.d,
        n=req.n,
        x=req.x,
        hstar=hstar,
        bounds_applicable=False,
        skipped=data["skipped"],
        rows=rows,
    )


def handle_logderiv(req: LogderivRequest) -> LogderivResponse:
    field = QuadraticField(req.d)
    value, tail = logderiv_empirical(req.sigma, req.t, field, req.x_cut)
    s = complex(req.sigma, req.t)
    combined = abs(value + 1.0 / (s - 1.0))
    ref = FieldParameters(req.ref_delta)
    majorant = majorant_principal(req.t, ref)
    return LogderivResponse(
        d=req.d,
        sigma=req.sigma,
        t=req.t,
        x_cut=req.x_cut,
        value_re=value.real,
        value_im=value.imag,
        combined_abs=combined,
        tail_bound=tail,
        majorant=majorant,
        slack_factor=majorant / (combined + tail),
    )


def handle_cm_verify(req: CmVerifyRequest) -> CmVerifyResponse:
    valid, reason = verify_cm_pair(
        CMCandidate(p=req.p, q=req.q, t=req.t, f=req.f, delta=req.delta)
    )
    return CmVerifyResponse(
        p=req.p,
        q=req.q,
        t=req.t,
        f=req.f,
        delta=req.delta,
        valid=valid,
        failure_reason=reason,
    )


def handle_cm_search(req: CmSearchRequest) -> CmSearchResponse:
    candidates = search_cm_pairs(req.delta, req.p_min, req.p_max, req.q_min, req.limit)
    return CmSearchResponse(
        delta=req.delta,
        p_min=req.p_min,
        p_max=req.p_max,
        q_min=req.q_min,
        count=len(candidates),
        candidates=[CmCandidateModel(**c.to_dict()) for c in candidates],
    )


app = FastAPI(title="pitbounds", version=__version__)


@app.exception_handler(ParameterError)
async def _parameter_error(request: Request, exc: ParameterError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ResourceLimitError)
async def _resource_error(request: Request, exc: ResourceLimitError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(QuadratureError)
async def _quadrature_error(request: Request, exc: QuadratureError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", name="pitbounds", version=__version__)


@app.post("/threshold", response_model=ThresholdResponse)
def threshold(req: ThresholdRequest) -> ThresholdResponse:
    return handle_threshold(req)


@app.post("/bounds", response_model=BoundsResponse)
def bounds(req: BoundsRequest) -> BoundsResponse:
    return handle_bounds(req)


@app.post("/ledger", response_model=LedgerResponse)
def ledger(req: LedgerRequest) -> LedgerResponse:
    return handle_ledger(req)


@app.post("/verify-lemmas", response_model=VerifyResponse)
def verify_lemmas(req: VerifyRequest) -> VerifyResponse:
    return handle_verify(req)


@app.post("/psi", response_model=PsiResponse)
def psi(req: PsiRequest) -> PsiResponse:
    return handle_psi(req)


@app.post("/logderiv", response_model=LogderivResponse)
def logderiv(req: LogderivRequest) -> LogderivResponse:
    return handle_logderiv(req)


@app.post("/cm-verify", response_model=CmVerifyResponse)
def cm_verify(req: CmVerifyRequest) -> CmVerifyResponse:
    return handle_cm_verify(req)


@app.post("/cm-search", response_model=CmSearchResponse)
def cm_search(req: CmSearchRequest) -> CmSearchResponse:
    return handle_cm_search(req)


def main() -> None:
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)


if __name__ == "__main__":
    main()
