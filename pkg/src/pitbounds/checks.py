"""Numerical certification of the tail-integral and substitution inequalities.

Every check compares a measured quantity (an adaptive quadrature value or a
direct evaluation) against the closed-form bound it must respect, over
parameter grids shipped as data.  Reports carry the measured slack so a run
documents how much room each inequality has, not just that it holds.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional

from .bounds import (
    DEFAULT_CONTEXT,
    ZetaContext,
    majorant_nonprincipal,
    majorant_principal,
    substitution_exponent_scale,
    substitution_floor_log_x,
)
from .errors import ParameterError, ThresholdError
from .fields import (
    CONSTANTS,
    PRINCIPAL,
    CharacterKind,
    FieldParameters,
    contour_scale,
    log_conductor,
)
from .quadrature import tail_integral

# Tolerance of the pass predicate: measured <= bound * (1 + PASS_TOL) admits
# the documented equality cases at quadrature accuracy.
PASS_TOL = 1e-9


@dataclass(frozen=True)
class VerificationReport:
    """Machine-readable outcome of one inequality check."""

    check_name: str
    parameters: dict
    bound_value: float
    measured_value: float

    @property
    def slack(self) -> float:
        return self.bound_value - self.measured_value

    @property
    def passed(self) -> bool:
        return self.measured_value <= self.bound_value * (1.0 + PASS_TOL)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "parameters": self.parameters,
            "bound_value": self.bound_value,
            "measured_value": self.measured_value,
            "slack": self.slack,
            "passed": self.passed,
        }


def _report(name: str, parameters: dict, bound: float, measured: float) -> VerificationReport:
    return VerificationReport(
        check_name=name,
        parameters=parameters,
        bound_value=bound,
        measured_value=measured,
    )


def _tail_log_factor(T: float, shift: float = 4.0) -> float:
    return math.log(math.e * (T + shift)) / T


def check_tail_integral_bounds(
    params: FieldParameters,
    T: float,
    kind: CharacterKind,
    ctx: ZetaContext = DEFAULT_CONTEXT,
    rel_err: float = 1e-8,
    which: Optional[Iterable[str]] = None,
) -> list[VerificationReport]:
    """Certify the six tail-integral bounds at one grid point.

    * inverse_square:       int t^-2            <= 1/T          (equality)
    * log:                  int t^-2 log(t+4)   <= log(e(T+4))/T
    * conductor_log:        int t^-2 L(t)       <= c5 log(e(T+4))/T
    * shifted_log:          int t^-2 log(1+A3 L)^(2 r2) <= c6 ...
    * majorant_principal:   int t^-2 phi0(t)    <= c8 ...
    * majorant_nonprincipal:int t^-2 phi(t)     <= c9 ...

    `which` restricts the set; defaults to all six.
    """
    if T < 1.0:
        raise ParameterError(f"tail bounds hold for T >= 1, got {T}")
    consts = CONSTANTS
    d = params.abs_discriminant
    nf = params.conductor_norm
    r2 = params.r2
    base = {
        "T": T,
        "abs_discriminant": d,
        "r2": r2,
        "conductor_norm": nf,
        "e0": kind.e0,
        "eps_chi": kind.eps_chi,
    }
    log_factor = _tail_log_factor(T)
    selected = set(which) if which is not None else None
    reports: list[VerificationReport] = []

    def want(name: str) -> bool:
        return selected is None or name in selected

    if want("inverse_square"):
        measured = tail_integral(lambda t: 1.0, T, rel_err)
        reports.append(_report("tail_inverse_square", base, 1.0 / T, measured))
    if want("log"):
        measured = tail_integral(lambda t: math.log(t + 4.0), T, rel_err)
        reports.append(_report("tail_log", base, log_factor, measured))
    if want("conductor_log"):
        measured = tail_integral(lambda t: log_conductor(t, params, kind), T, rel_err)
        weighted = math.log(d * nf ** (consts.A0 * (1 - kind.e0)))
        bound = 1.09 * r2 * weighted * log_factor
        reports.append(_report("tail_conductor_log", base, bound, measured))
    if want("shifted_log"):
        measured = tail_integral(
            lambda t: 2.0 * r2 * math.log1p(consts.A3 * log_conductor(t, params, kind)),
            T,
            rel_err,
        )
        weighted = math.log(d * nf ** (consts.A0 * (1 - kind.e0)))
        bound = 11.605 * r2**2 * weighted * log_factor
        reports.append(_report("tail_shifted_log", base, bound, measured))
    if want("majorant_principal"):
        measured = tail_integral(lambda t: majorant_principal(t, params, ctx), T, rel_err)
        bound = 1138.428 * r2**2 * math.log(d * nf**0.625) * log_factor
        reports.append(_report("tail_majorant_principal", base, bound, measured))
    if want("majorant_nonprincipal"):
        nctx = ZetaContext(eta=ctx.eta, w=ctx.w, kind=CharacterKind(0, kind.eps_chi))
        measured = tail_integral(lambda t: majorant_nonprincipal(t, params, nctx), T, rel_err)
        bound = 821.212 * r2**2 * params.log_disc_cond * log_factor
        reports.append(_report("tail_majorant_nonprincipal", base, bound, measured))
    return reports


def substitution_height(log_x: float, params: FieldParameters, kind: CharacterKind, ctx: ZetaContext) -> float:
    """T defined by T + 1 = c0 exp(c4 sqrt(log x)) for the given character kind."""
    c0 = contour_scale(params, kind)
    c4 = substitution_exponent_scale(params, ctx)
    return c0 * math.exp(c4 * math.sqrt(log_x)) - 1.0


def check_majorant_substitution(
    log_x: float,
    params: FieldParameters,
    ctx: ZetaContext = DEFAULT_CONTEXT,
) -> list[VerificationReport]:
    """Certify the substituted majorant bounds and the log-conductor identity.

    With T from the substitution (per character kind, since the scale c0
    carries e0):

        phi(T)  <= 230.911 r2^(3/2) log(|disc| Nf) sqrt(log x)
        phi0(T) <= 412.531 r2^(3/2) log(|disc| Nf) sqrt(log x)
        L(T)    =  A0 sqrt(2 r2 / w) sqrt(log x)     (exact identity)

    Raises ThresholdError below the substitution floor (where T < 1).
    """
    consts = CONSTANTS
    scale = params.r2**1.5 * params.log_disc_cond * math.sqrt(log_x)
    reports: list[VerificationReport] = []
    for label, kind, coeff in (
        ("principal", PRINCIPAL, 412.531),
        ("nonprincipal", CharacterKind(0, ctx.kind.eps_chi), 230.911),
    ):
        floor = substitution_floor_log_x(params, kind, ctx)
        if log_x < floor * (1.0 - 1e-12):
            raise ThresholdError(
                f"log x = {log_x} below the {label} substitution floor {floor:.3f}"
            )
        T = substitution_height(log_x, params, kind, ctx)
        base = {
            "log_x": log_x,
            "T": T,
            "abs_discriminant": params.abs_discriminant,
            "r2": params.r2,
            "conductor_norm": params.conductor_norm,
            "e0": kind.e0,
            "eps_chi": kind.eps_chi,
        }
        if label == "principal":
            measured = majorant_principal(T, params, ctx)
        else:
            nctx = ZetaContext(eta=ctx.eta, w=ctx.w, kind=kind)
            measured = majorant_nonprincipal(T, params, nctx)
        reports.append(_report(f"substituted_majorant_{label}", base, coeff * scale, measured))
        # Exact identity: the substitution collapses L(T) to a pure sqrt(log x).
        # Reported two-sidedly as |L(T) - identity| <= 1e-9 * identity.
        ident = consts.A0 * math.sqrt(2.0 * params.r2 / ctx.w) * math.sqrt(log_x)
        measured_l = log_conductor(T, params, kind)
        reports.append(
            _report(
                f"substitution_identity_{label}",
                base,
                1e-9 * ident,
                abs(measured_l - ident),
            )
        )
    return reports


def check_inverse_powers(
    log_x: float,
    params: FieldParameters,
    kind: CharacterKind,
    ctx: ZetaContext = DEFAULT_CONTEXT,
    k: int = 1,
) -> list[VerificationReport]:
    """Certify 1/T^k <= 2^k c0^-k exp(-k c4 sqrt(log x)) and the log-shift bound.

    At the substitution floor T = 1 and the power bound is an equality.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    floor = substitution_floor_log_x(params, kind, ctx)
    if log_x < floor * (1.0 - 1e-12):
        raise ThresholdError(f"log x = {log_x} below the substitution floor {floor:.3f}")
    c0 = contour_scale(params, kind)
    c4 = substitution_exponent_scale(params, ctx)
    T = substitution_height(log_x, params, kind, ctx)
    base = {
        "log_x": log_x,
        "T": T,
        "k": k,
        "abs_discriminant": params.abs_discriminant,
        "r2": params.r2,
        "conductor_norm": params.conductor_norm,
        "e0": kind.e0,
        "eps_chi": kind.eps_chi,
    }
    root = math.sqrt(log_x)
    power_bound = (2.0 / c0) ** k * math.exp(-k * c4 * root)
    shift_bound = c4 * root + math.log(math.e * (k + 1) / 2.0)
    return [
        _report(f"inverse_power_k{k}", base, power_bound, 1.0 / T**k),
        _report(f"log_shift_k{k}", base, shift_bound, math.log(math.e * (T + k))),
    ]


# ---------------------------------------------------------------------------
# Grid runner.


def default_grid() -> dict:
    """Grid shipped with the package (grids are data, not code)."""
    with resources.files("pitbounds.data").joinpath("default_grid.json").open() as fh:
        return json.load(fh)


def load_grid(path: Optional[str]) -> dict:
    if path is None:
        return default_grid()
    with open(path) as fh:
        return json.load(fh)


def run_grid(grid: dict, rel_err: float = 1e-8) -> list[VerificationReport]:
    """Evaluate every check over the grid, deduplicated, in deterministic order.

    Grid points that differ only in coordinates a check ignores (e.g. eps_chi
    for the principal majorant) are evaluated once.  Reports appear in nested
    grid order: tail bounds, then substitution bounds, then inverse powers.
    """
    ctx_base = ZetaContext(eta=grid.get("eta", 0.25), w=grid.get("w", 58.0))
    reports: list[VerificationReport] = []
    seen: set[tuple] = set()

    discs = grid["abs_discriminant"]
    r2s = grid["r2"]
    nfs = grid["conductor_norm"]
    e0s = grid.get("E0", [0, 1])
    eps_chis = grid.get("eps_chi", [0, 1])
    ts = grid["T"]
    factors = grid.get("log_x_factors", [1.0, 1.5, 4.0])
    ks = grid.get("inverse_k", [1, 3])

    # Dependency signature of each tail check; coordinates outside it are
    # collapsed so no quadrature runs twice.
    tail_signature = {
        "inverse_square": lambda d, r2, nf, e0, e, T: (T,),
        "log": lambda d, r2, nf, e0, e, T: (T,),
        "conductor_log": lambda d, r2, nf, e0, e, T: (T, d, r2, nf, e0),
        "shifted_log": lambda d, r2, nf, e0, e, T: (T, d, r2, nf, e0),
        "majorant_principal": lambda d, r2, nf, e0, e, T: (T, d, r2, nf),
        "majorant_nonprincipal": lambda d, r2, nf, e0, e, T: (T, d, r2, nf, e),
    }
    for T, r2, d, nf, e0, eps in itertools.product(ts, r2s, discs, nfs, e0s, eps_chis):
        params = FieldParameters(d, r2, nf)
        kind = CharacterKind(e0, eps)
        wanted = []
        for name, sig in tail_signature.items():
            key = (name, sig(d, r2, nf, e0, eps, T))
            if key not in seen:
                seen.add(key)
                wanted.append(name)
        if wanted:
            reports.extend(
                check_tail_integral_bounds(params, T, kind, ctx_base, rel_err, wanted)
            )

    for r2, d, nf, eps in itertools.product(r2s, discs, nfs, eps_chis):
        params = FieldParameters(d, r2, nf)
        ctx = ZetaContext(eta=ctx_base.eta, w=ctx_base.w, kind=CharacterKind(0, eps))
        floor = substitution_floor_log_x(params, CharacterKind(0, eps), ctx)
        for factor in factors:
            key = ("substitution", d, r2, nf, eps, factor)
            if key in seen:
                continue
            seen.add(key)
            reports.extend(check_majorant_substitution(floor * factor, params, ctx))

    for r2, d, nf, e0, k in itertools.product(r2s, discs, nfs, e0s, ks):
        params = FieldParameters(d, r2, nf)
        kind = CharacterKind(e0, 0)
        floor = substitution_floor_log_x(params, kind, ctx_base)
        for factor in factors:
            key = ("inverse", d, r2, nf, e0, k, factor)
            if key in seen:
                continue
            seen.add(key)
            reports.extend(
                check_inverse_powers(floor * factor, params, kind, ctx_base, k)
            )
    return reports
