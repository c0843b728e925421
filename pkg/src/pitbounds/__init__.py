"""Explicit Chebyshev-type bounds for prime ideal counting over number fields.

The package evaluates the full constant chain of the explicit bounds,
numerically certifies the tail-integral and substitution inequalities behind
them, confronts the asymptotics with empirically computed prime-ideal sums
over imaginary quadratic fields, and searches for the CM prime pairs the
bounds were built to produce.  A FastAPI service wraps the core; the CLI is a
thin in-process client of the same handlers.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundLedger,
    LedgerEntry,
    MinLogX,
    ZetaContext,
    build_ledger,
    constant_chain,
    epsilon_threshold,
    majorant_nonprincipal,
    majorant_principal,
    min_log_x,
    psi_envelope,
    psi_envelope_rel,
    psi_error_coefficients,
    riemann_zeta,
    threshold_from_u,
    window_error_coefficient,
    window_lower_log,
)
from .checks import (
    VerificationReport,
    check_inverse_powers,
    check_majorant_substitution,
    check_tail_integral_bounds,
    default_grid,
    run_grid,
)
from .cm import CMCandidate, search_cm_pairs, verify_cm_pair
from .errors import (
    ParameterError,
    QuadratureError,
    ResourceLimitError,
    ThresholdError,
    UnsupportedFieldError,
)
from .fields import (
    CONSTANTS,
    AnalyticConstants,
    CharacterKind,
    FieldParameters,
    NONPRINCIPAL,
    PRINCIPAL,
    contour_scale,
    log_conductor,
    root_conductor,
    zero_free_sigma,
)
from .ideals import (
    PrimeIdealPower,
    QuadraticField,
    RayClassGroup,
    big_psi_empirical,
    enumerate_prime_ideal_powers,
    generator_of_prime_ideal,
    logderiv_empirical,
    psi_by_class,
    psi_empirical,
    ray_class_group,
    splitting_type,
)
from .lambert import lambert_w, neg_wm1_exp, wm1_envelope
from .quadrature import tail_integral

__all__ = [
    "AnalyticConstants",
    "BoundLedger",
    "CMCandidate",
    "CONSTANTS",
    "CharacterKind",
    "FieldParameters",
    "LedgerEntry",
    "MinLogX",
    "NONPRINCIPAL",
    "PRINCIPAL",
    "ParameterError",
    "PrimeIdealPower",
    "QuadraticField",
    "QuadratureError",
    "RayClassGroup",
    "ResourceLimitError",
    "ThresholdError",
    "UnsupportedFieldError",
    "VerificationReport",
    "ZetaContext",
    "big_psi_empirical",
    "build_ledger",
    "check_inverse_powers",
    "check_majorant_substitution",
    "check_tail_integral_bounds",
    "constant_chain",
    "contour_scale",
    "default_grid",
    "enumerate_prime_ideal_powers",
    "epsilon_threshold",
    "generator_of_prime_ideal",
    "lambert_w",
    "log_conductor",
    "logderiv_empirical",
    "majorant_nonprincipal",
    "majorant_principal",
    "min_log_x",
    "neg_wm1_exp",
    "psi_by_class",
    "psi_empirical",
    "psi_envelope",
    "psi_envelope_rel",
    "psi_error_coefficients",
    "ray_class_group",
    "riemann_zeta",
    "root_conductor",
    "run_grid",
    "search_cm_pairs",
    "splitting_type",
    "tail_integral",
    "threshold_from_u",
    "verify_cm_pair",
    "window_error_coefficient",
    "window_lower_log",
    "zero_free_sigma",
]
