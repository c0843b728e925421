"""CM-prime pairs: checker and desk-scale searcher.

A pair of primes (p, q) is a CM pair for a negative discriminant when integers
t, f exist with |t| <= 2 sqrt(p), q | p + 1 - t and 4p - t^2 = |disc| f^2.
(The defining equation is stated with disc f^2 on the right, which is negative;
the absolute value is the only satisfiable reading and the checker implements
it, recording the sign convention rather than guessing further.)

The searcher enumerates the quadratic form (t, f) instead of primes, so the
norm equation holds by construction, and factors p + 1 - t to find the large
prime divisor.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .arith import is_prime, largest_prime_factor
from .errors import ParameterError, ResourceLimitError

SEARCH_CAP = 2**34


@dataclass(frozen=True)
class CMCandidate:
    p: int
    q: int
    t: int
    f: int
    delta: int

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "t": self.t, "f": self.f, "delta": self.delta}


def verify_cm_pair(candidate: CMCandidate) -> tuple[bool, Optional[str]]:
    """Total checker; returns (valid, first violated clause or None).

    Clause order: p_not_prime, q_not_prime, trace_bound, divisibility,
    norm_form.
    """
    c = candidate
    if not is_prime(c.p):
        return False, "p_not_prime"
    if not is_prime(c.q):
        return False, "q_not_prime"
    if c.t * c.t > 4 * c.p:
        return False, "trace_bound"
    if (c.p + 1 - c.t) % c.q != 0:
        return False, "divisibility"
    if c.delta >= 0 or c.f < 1 or 4 * c.p - c.t * c.t != -c.delta * c.f * c.f:
        return False, "norm_form"
    return True, None


def _trace_parity(delta_abs: int, f: int) -> Optional[int]:
    """Parity t must have so that t^2 + delta_abs f^2 = 0 mod 4, or None."""
    residue = delta_abs * f * f % 4
    if residue == 0:
        return 0
    if residue == 3:
        return 1
    return None


def iterate_cm_pairs(
    delta: int,
    p_min: int,
    p_max: int,
    q_min: int = 2,
) -> Iterator[CMCandidate]:
    """Candidates in ascending (p, t, f) order, lazily.

    A heap merges, over f, the per-f sequences of 4p = t^2 + |delta| f^2
    ordered by p; within one p the negative trace precedes the positive one.
    """
    if delta >= 0 or delta % 4 not in (0, 1):
        raise ParameterError(f"delta must be negative and 0 or 1 mod 4, got {delta}")
    if p_max > SEARCH_CAP:
        raise ResourceLimitError(f"p_max = {p_max} exceeds the search cap {SEARCH_CAP}")
    if p_min < 2 or p_max < p_min:
        raise ParameterError(f"need 2 <= p_min <= p_max, got [{p_min}, {p_max}]")
    delta_abs = -delta
    lo, hi = 4 * p_min, 4 * p_max

    def traces_for(f: int) -> Optional[Iterator[int]]:
        parity = _trace_parity(delta_abs, f)
        if parity is None:
            return None
        base = delta_abs * f * f
        if base > hi:
            return None

        def gen() -> Iterator[int]:
            t0 = math.isqrt(max(lo - base, 0))
            while t0 * t0 < lo - base:
                t0 += 1
            if t0 % 2 != parity:
                t0 += 1
            t = t0
            while base + t * t <= hi:
                if t > 0:
                    yield -t
                yield t
                t += 2

        return gen()

    heap: list[tuple[int, int, int, Iterator[int]]] = []
    f = 1
    while delta_abs * f * f <= hi:
        seq = traces_for(f)
        if seq is not None:
            first = next(seq, None)
            if first is not None:
                heapq.heappush(heap, (delta_abs * f * f + first * first, first, f, seq))
        f += 1

    while heap:
        four_p, t, f, seq = heapq.heappop(heap)
        nxt = next(seq, None)
        if nxt is not None:
            heapq.heappush(heap, (delta_abs * f * f + nxt * nxt, nxt, f, seq))
        p = four_p // 4
        if not is_prime(p):
            continue
        cofactor = p + 1 - t
        if cofactor <= 1:
            continue
        q = largest_prime_factor(cofactor)
        if q is None or q < q_min:
            continue
        yield CMCandidate(p=p, q=q, t=t, f=f, delta=delta)


def search_cm_pairs(
    delta: int,
    p_min: int,
    p_max: int,
    q_min: int = 2,
    limit: Optional[int] = None,
) -> list[CMCandidate]:
    """Collect candidates (ascending p, then t); `limit` stops the scan early."""
    out: list[CMCandidate] = []
    for candidate in iterate_cm_pairs(delta, p_min, p_max, q_min):
        out.append(candidate)
        if limit is not None and len(out) >= limit:
            break
    return out
