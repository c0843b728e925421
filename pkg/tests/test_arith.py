import math

import numpy as np

from pitbounds.arith import (
    cornacchia_4p,
    is_prime,
    is_square,
    largest_prime_factor,
    primes_in_range,
    sieve,
    sqrt_mod_prime,
)


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % f for f in range(2, math.isqrt(n) + 1))


def test_is_prime_small_exhaustive():
    for n in range(-3, 2000):
        assert is_prime(n) == naive_is_prime(n), n


def test_is_prime_known_values():
    assert is_prime(2**31 - 1)
    assert is_prime(1_000_000_007)
    # Carmichael numbers and strong-pseudoprime bait.
    for n in (561, 1105, 1729, 2465, 3215031751):
        assert not is_prime(n)


def test_sieve_matches_naive():
    primes = sieve(500)
    assert list(primes) == [n for n in range(501) if naive_is_prime(n)]
    assert len(sieve(10**6)) == 78498
    assert len(sieve(1)) == 0


def test_segmented_matches_sieve():
    parts = [block for block in primes_in_range(2, 10**5, segment=7919)]
    combined = np.concatenate(parts)
    assert np.array_equal(combined, sieve(10**5 - 1))
    assert list(np.concatenate(list(primes_in_range(90, 120, segment=8)))) == [
        97, 101, 103, 107, 109, 113,
    ]


def test_largest_prime_factor():
    assert largest_prime_factor(96) == 3
    assert largest_prime_factor(97) == 97
    assert largest_prime_factor(2 * 3 * 5 * 101) == 101
    assert largest_prime_factor(1) is None
    assert largest_prime_factor(10**9 + 7) == 10**9 + 7
    assert largest_prime_factor(2**20) == 2


def test_sqrt_mod_prime_exhaustive():
    for p in sieve(200)[1:]:  # odd primes
        p = int(p)
        squares = {(x * x) % p for x in range(p)}
        for a in range(p):
            root = sqrt_mod_prime(a, p)
            if a in squares:
                assert root is not None
                assert root * root % p == a
            else:
                assert root is None


def test_is_square():
    assert is_square(0) and is_square(1) and is_square(144)
    assert not is_square(-4)
    assert not is_square(145)
    big = (10**9 + 7) ** 2
    assert is_square(big) and not is_square(big + 1)


def test_cornacchia_solves_form():
    for d_abs in (4, 7, 8, 11, 163):
        for p in (int(q) for q in sieve(2000)):
            result = cornacchia_4p(d_abs, p)
            if result is None:
                continue
            t, f = result
            assert t >= 0 and f >= 1
            assert t * t + d_abs * f * f == 4 * p


def test_cornacchia_finds_known_solutions():
    assert cornacchia_4p(7, 29) == (2, 4)
    assert cornacchia_4p(7, 2) == (1, 1)
    # 4*5 = 4 + 4*4: the Gaussian case, t even.
    t, f = cornacchia_4p(4, 5)
    assert t * t + 4 * f * f == 20
    # Inert prime: no solution.
    assert cornacchia_4p(4, 3) is None


def test_cornacchia_exhaustive_against_brute_force():
    def brute(d_abs, p):
        for f in range(1, math.isqrt(4 * p // d_abs) + 1):
            rest = 4 * p - d_abs * f * f
            if rest >= 0 and is_square(rest):
                return True
        return False

    for d_abs in (7, 11, 19):
        for p in (int(q) for q in sieve(500)):
            assert (cornacchia_4p(d_abs, p) is not None) == brute(d_abs, p), (d_abs, p)
