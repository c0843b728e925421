"""Integer arithmetic utilities: sieves, primality, square roots mod p, Cornacchia."""

from __future__ import annotations

import math
from typing import Iterator, Optional

import numpy as np

from .errors import ResourceLimitError

# Witness set making Miller-Rabin deterministic for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit-scale integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_range(lo: int, hi: int, segment: int = 1 << 22) -> Iterator[np.ndarray]:
    """Segmented sieve: yields arrays of primes in [lo, hi) in bounded memory."""
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = sieve(math.isqrt(hi - 1))
    start = lo
    while start < hi:
        stop = min(start + segment, hi)
        flags = np.ones(stop - start, dtype=bool)
        for p in base:
            p = int(p)
            # Striking starts at p*p, so base primes inside the segment survive.
            first = max(p * p, ((start + p - 1) // p) * p)
            if first >= stop:
                continue
            flags[first - start :: p] = False
        yield (np.flatnonzero(flags) + start).astype(np.int64)
        start = stop


def largest_prime_factor(n: int, trial_bound: int = 100_000) -> Optional[int]:
    """Largest prime factor of n, or None for n <= 1.

    Trial division up to trial_bound followed by a single primality test on
    the cofactor; complete for n <= trial_bound^2 (the desk-scale cap here).
    """
    if n <= 1:
        return None
    best = 0
    while n % 2 == 0:
        best = 2
        n //= 2
    f = 3
    while f <= trial_bound and f * f <= n:
        while n % f == 0:
            best = f
            n //= f
        f += 2
    if n > 1:
        if not is_prime(n):
            raise ResourceLimitError(
                f"cofactor {n} exceeds the trial-division range and is composite"
            )
        best = max(best, n)
    return best if best else None


def sqrt_mod_prime(a: int, p: int) -> Optional[int]:
    """Tonelli-Shanks: r with r^2 = a (mod p) for odd prime p, None if no root."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Write p - 1 = q 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def cornacchia_4p(d_abs: int, p: int) -> Optional[tuple[int, int]]:
    """Solve t^2 + d_abs f^2 = 4p with t, f >= 0, for prime p and -d_abs = 0,1 mod 4.

    Returns None when -d_abs is a non-residue mod p (no solution).  For p = 2
    the handful of cases is done directly.
    """
    if d_abs <= 0 or (-d_abs) % 4 not in (0, 1):
        raise ValueError(f"discriminant -{d_abs} must be 0 or 1 mod 4")
    if p == 2:
        for f in (1, 2):
            rest = 8 - d_abs * f * f
            if rest >= 0 and is_square(rest):
                return math.isqrt(rest), f
        return None
    x0 = sqrt_mod_prime(-d_abs % p, p)
    if x0 is None:
        return None
    # Match the parity of the discriminant so x0^2 = -d_abs mod 4p.
    if x0 % 2 != d_abs % 2:
        x0 = p - x0
    a, b = 2 * p, x0
    limit = math.isqrt(4 * p)
    while b > limit:
        a, b = b, a % b
    rest = 4 * p - b * b
    if rest % d_abs != 0:
        return None
    c = rest // d_abs
    if not is_square(c):
        return None
    return b, math.isqrt(c)
