"""Adaptive evaluation of tail integrals of the form  integral_T^inf f(t) t^-2 dt.

The substitution t = T/(1-v) maps the tail onto [0, 1) and cancels the t^-2
weight exactly:

    integral_T^inf f(t) t^-2 dt  =  (1/T) integral_0^1 f(T/(1-v)) dv.

All integrands used here grow at most logarithmically, so the transformed
integrand has an integrable logarithmic endpoint at v = 1.  Adaptive Simpson
with interval-halving error estimates runs on [0, 1-EDGE]; the clipped sliver
is estimated by its midpoint value and folded into the result (bounded by
EDGE * f(2T/EDGE), orders of magnitude below the requested accuracy).
"""

from __future__ import annotations

from typing import Callable

from .errors import QuadratureError

_EDGE = 1e-12


def _simpson(g: Callable[[float], float], a: float, fa: float, b: float, fb: float, fm: float) -> float:
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def tail_integral(
    f: Callable[[float], float],
    T: float,
    rel_err: float = 1e-8,
    max_evals: int = 10**6,
) -> float:
    """Adaptive value of integral_T^inf f(t) t^-2 dt with relative error rel_err.

    Raises QuadratureError if the refinement cap is exhausted before the
    error target is met.
    """
    if T < 1.0:
        raise QuadratureError(f"tail integrals are evaluated for T >= 1, got {T}")
    if rel_err <= 0.0:
        raise QuadratureError("rel_err must be positive")

    def g(v: float) -> float:
        return f(T / (1.0 - v))

    a, b = 0.0, 1.0 - _EDGE
    evals = 0

    def geval(v: float) -> float:
        nonlocal evals
        evals += 1
        if evals > max_evals:
            raise QuadratureError(
                f"quadrature did not converge within {max_evals} evaluations"
            )
        return g(v)

    fa, fb = geval(a), geval(b)
    fm = geval(0.5 * (a + b))
    whole = _simpson(g, a, fa, b, fb, fm)

    # Two passes: the absolute tolerance is set from the current estimate and
    # the pass repeats if the converged value moved the scale materially.
    estimate = abs(whole) + 1e-300
    for _ in range(3):
        tol = rel_err * estimate
        total = 0.0
        # Stack of (a, fa, b, fb, fm, local_tol, whole_estimate).
        stack = [(a, fa, b, fb, fm, tol, whole)]
        while stack:
            xa, ya, xb, yb, ym, loc_tol, s_whole = stack.pop()
            xm = 0.5 * (xa + xb)
            xlm = 0.5 * (xa + xm)
            xrm = 0.5 * (xm + xb)
            ylm = geval(xlm)
            yrm = geval(xrm)
            s_left = _simpson(g, xa, ya, xm, ym, ylm)
            s_right = _simpson(g, xm, ym, xb, yb, yrm)
            delta = s_left + s_right - s_whole
            if abs(delta) <= 15.0 * loc_tol or (xb - xa) < 1e-14:
                total += s_left + s_right + delta / 15.0
            else:
                stack.append((xa, ya, xm, ym, ylm, loc_tol / 2.0, s_left))
                stack.append((xm, ym, xb, yb, yrm, loc_tol / 2.0, s_right))
        if abs(total) <= 2.0 * estimate and abs(total) >= estimate / 2.0:
            estimate = abs(total) + 1e-300
            break
        estimate = abs(total) + 1e-300
    sliver = _EDGE * geval(1.0 - 0.5 * _EDGE)
    return (total + sliver) / T
