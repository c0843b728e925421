"""Field parameters, fixed analytic constants, and the elementary functions built from them.

Everything downstream (bound constants, majorants, inequality checks) consumes the
quadruple (|discriminant|, r2, conductor norm, class number) through this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

TWO_PI = 2.0 * math.pi

# Smallest value the log-conductor function is allowed to take.  Guaranteed by
# |discriminant| >= 9 (log 9 = 2.197...), asserted defensively everywhere.
LOG_CONDUCTOR_MIN = 2.097


@dataclass(frozen=True)
class AnalyticConstants:
    """Fixed numerical constants of the zero-free region and the majorants.

    B is derived as A1/6 = 0.01325 exactly, never stored rounded.
    C1_ISRAILOV enters no computation here; it is recorded because A4 is its
    rounded combination 4*C1*B.
    """

    A0: float = 0.7761
    A1: float = 0.0795
    A2: float = 0.962088
    A3: float = 75.472
    A4: float = 0.010
    C1_ISRAILOV: float = 0.1875463

    @property
    def B(self) -> float:
        return self.A1 / 6.0

    @property
    def w_max(self) -> float:
        """Open upper limit for the substitution weight w (A0/B = 58.57...)."""
        return self.A0 / self.B


CONSTANTS = AnalyticConstants()


@dataclass(frozen=True)
class FieldParameters:
    """The tuple every bound formula consumes.

    abs_discriminant: |discriminant| of the totally imaginary field, >= 9.
    r2: half the degree (degree = 2*r2).
    conductor_norm: norm of the modulus ideal.
    class_number: order of the ideal class group mod the conductor (h*).
    """

    abs_discriminant: int
    r2: int = 1
    conductor_norm: int = 1
    class_number: int = 1

    def __post_init__(self) -> None:
        if self.abs_discriminant < 9:
            raise ParameterError(
                f"abs_discriminant must be >= 9, got {self.abs_discriminant}"
            )
        if self.r2 < 1:
            raise ParameterError(f"r2 must be >= 1, got {self.r2}")
        if self.conductor_norm < 1:
            raise ParameterError(
                f"conductor_norm must be >= 1, got {self.conductor_norm}"
            )
        if self.class_number < 1:
            raise ParameterError(f"class_number must be >= 1, got {self.class_number}")

    @property
    def log_disc(self) -> float:
        return math.log(self.abs_discriminant)

    @property
    def log_disc_cond(self) -> float:
        """log(|discriminant| * conductor_norm)."""
        return math.log(self.abs_discriminant * self.conductor_norm)


@dataclass(frozen=True)
class CharacterKind:
    """Binary character flags: e0 = 1 iff principal, eps_chi = 0 iff primitive."""

    e0: int = 0
    eps_chi: int = 0

    def __post_init__(self) -> None:
        if self.e0 not in (0, 1):
            raise ParameterError(f"e0 must be 0 or 1, got {self.e0}")
        if self.eps_chi not in (0, 1):
            raise ParameterError(f"eps_chi must be 0 or 1, got {self.eps_chi}")


PRINCIPAL = CharacterKind(e0=1, eps_chi=0)
NONPRINCIPAL = CharacterKind(e0=0, eps_chi=0)
NONPRINCIPAL_IMPRIMITIVE = CharacterKind(e0=0, eps_chi=1)


def log_conductor(
    t: float,
    params: FieldParameters,
    kind: CharacterKind = NONPRINCIPAL,
    consts: AnalyticConstants = CONSTANTS,
) -> float:
    """log|disc| + A0*log((|t|+1)^(2 r2) * conductor_norm^(1-e0)).

    Strictly increasing in |t|, |disc| and (for e0=0) the conductor norm.
    The result is >= 2.097 for every valid parameter set; a smaller value
    signals an invalid combination and raises.
    """
    at = abs(t)
    value = params.log_disc + consts.A0 * (
        2.0 * params.r2 * math.log1p(at)
        + (1 - kind.e0) * math.log(params.conductor_norm)
    )
    if value < LOG_CONDUCTOR_MIN:
        raise ParameterError(
            f"log-conductor value {value} below {LOG_CONDUCTOR_MIN}; "
            "parameter combination outside the valid domain"
        )
    return value


def zero_free_sigma(
    t: float,
    params: FieldParameters,
    kind: CharacterKind = NONPRINCIPAL,
    consts: AnalyticConstants = CONSTANTS,
) -> float:
    """Left edge 1 - A1/L(t) of the zero-free half plane at height t."""
    return 1.0 - consts.A1 / log_conductor(t, params, kind, consts)


def root_conductor(params: FieldParameters) -> float:
    """(2*pi)^(-r2) * sqrt(|disc| * conductor_norm).

    Scale factor of the completed zeta function; appears inside the
    non-principal majorant.
    """
    return TWO_PI ** (-params.r2) * math.sqrt(
        params.abs_discriminant * params.conductor_norm
    )


def contour_scale(
    params: FieldParameters,
    kind: CharacterKind = NONPRINCIPAL,
    consts: AnalyticConstants = CONSTANTS,
) -> float:
    """|disc|^(-1/(2 A0 r2)) * conductor_norm^(-(1-e0)/(2 r2)).

    The scale c0 of the substitution T + 1 = c0 * exp(sqrt(log x / (2 w r2))).
    Always in (0, 1] when |disc| >= 9.
    """
    exponent = -params.log_disc / (2.0 * consts.A0 * params.r2)
    if not kind.e0:
        exponent -= math.log(params.conductor_norm) / (2.0 * params.r2)
    return math.exp(exponent)
