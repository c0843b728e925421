"""Prime ideals of imaginary quadratic fields: enumeration, ray classes, sums.

Everything here is specialized to r2 = 1 and (for class-resolved sums) to the
nine class-number-one fields, the smallest setting in which prime-ideal
classes modulo a conductor are computable without general ideal arithmetic.
Elements are written a + b*omega with omega = sqrt(d) for d = 2, 3 (mod 4)
and omega = (1 + sqrt(d))/2 for d = 1 (mod 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterator, Literal, Optional

import numpy as np

from .arith import cornacchia_4p, is_prime, sieve
from .errors import ParameterError, ResourceLimitError, UnsupportedFieldError

SplitType = Literal["split", "inert", "ramified"]

CLASS_NUMBER_ONE = frozenset({-1, -2, -3, -7, -11, -19, -43, -67, -163})

# Resource guard for full enumerations (norms are enumerated in memory).
ENUMERATION_CAP = 10**8
MODULUS_CAP = 10**4


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        while n % f == 0:
            n //= f
        f += 1
    return True


@dataclass(frozen=True)
class QuadraticField:
    """Imaginary quadratic field of squarefree d < 0."""

    d: int

    def __post_init__(self) -> None:
        if self.d >= 0:
            raise ParameterError(f"d must be negative, got {self.d}")
        if not _is_squarefree(self.d):
            raise ParameterError(f"d must be squarefree, got {self.d}")

    @property
    def discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def abs_discriminant(self) -> int:
        return -self.discriminant

    @property
    def unit_count(self) -> int:
        if self.d == -1:
            return 4
        if self.d == -3:
            return 6
        return 2

    @property
    def class_number_one(self) -> bool:
        return self.d in CLASS_NUMBER_ONE

    @property
    def half_coordinates(self) -> bool:
        """True when the ring is Z[(1+sqrt(d))/2]."""
        return self.d % 4 == 1

    def norm(self, a: int, b: int) -> int:
        if self.half_coordinates:
            return a * a + a * b + b * b * (1 - self.d) // 4
        return a * a - self.d * b * b

    def conjugate(self, a: int, b: int) -> tuple[int, int]:
        if self.half_coordinates:
            return a + b, -b
        return a, -b

    def multiply(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        a, b = x
        c, e = y
        if self.half_coordinates:
            q = (self.d - 1) // 4  # omega^2 = omega + q
            return a * c + b * e * q, a * e + b * c + b * e
        return a * c + self.d * b * e, a * e + b * c

    def units(self) -> list[tuple[int, int]]:
        if self.d == -1:
            return [(1, 0), (0, 1), (-1, 0), (0, -1)]
        if self.d == -3:
            # Powers of the sixth root of unity omega = (1 + sqrt(-3))/2.
            return [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
        return [(1, 0), (-1, 0)]


@dataclass(frozen=True)
class PrimeIdealPower:
    """One term of the generalized Mangoldt sum.

    norm_base is the prime ideal norm (p, or p^2 for inert primes); the term
    weight is log(norm_base) regardless of the exponent.  conjugate
    distinguishes the two ideals above a split prime.
    """

    p: int
    split_type: SplitType
    norm_base: int
    exponent: int
    conjugate: int = 0
    class_index: Optional[int] = None

    @property
    def weight(self) -> float:
        return math.log(self.norm_base)

    @property
    def norm_power(self) -> int:
        return self.norm_base**self.exponent


def splitting_type(p: int, field: QuadraticField) -> SplitType:
    """Kronecker-symbol splitting of the rational prime p."""
    if p < 2 or not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")
    disc = field.discriminant
    if p == 2:
        if disc % 2 == 0:
            return "ramified"
        return "split" if disc % 8 == 1 else "inert"
    if disc % p == 0:
        return "ramified"
    return "split" if pow(disc % p, (p - 1) // 2, p) == 1 else "inert"


def enumerate_prime_ideal_powers(
    x_max: float, field: QuadraticField, cap: float = ENUMERATION_CAP
) -> Iterator[PrimeIdealPower]:
    """All prime ideal powers with norm strictly below x_max.

    Split primes are yielded twice (one term per conjugate ideal).  Order is
    ascending norm, ties broken by (p, conjugate, exponent).
    """
    if x_max > cap:
        raise ResourceLimitError(f"x_max = {x_max} exceeds the enumeration cap {cap}")
    if x_max <= 2:
        return
    terms: list[PrimeIdealPower] = []
    for p in sieve(math.ceil(x_max) - 1):
        p = int(p)
        if p >= x_max:
            continue
        kind = splitting_type(p, field)
        norm_base = p * p if kind == "inert" else p
        if norm_base >= x_max:
            continue
        norm = norm_base
        exponent = 1
        while norm < x_max:
            if kind == "split":
                terms.append(PrimeIdealPower(p, kind, norm_base, exponent, 0))
                terms.append(PrimeIdealPower(p, kind, norm_base, exponent, 1))
            else:
                terms.append(PrimeIdealPower(p, kind, norm_base, exponent, 0))
            exponent += 1
            norm *= norm_base
    terms.sort(key=lambda t: (t.norm_power, t.p, t.conjugate, t.exponent))
    yield from terms


def generator_of_prime_ideal(
    p: int, conjugate: int, field: QuadraticField
) -> tuple[int, int]:
    """Canonical principal generator of a prime ideal above p (brute force).

    Searches b = 0, 1, 2, ... and within each b the order a = 0, 1, -1, 2, ...
    The conjugate flag returns the coordinate conjugate of the canonical
    choice.  Only meaningful for class-number-one fields, where every ideal
    is principal.
    """
    if not field.class_number_one:
        raise UnsupportedFieldError(f"d = {field.d} has class number > 1")
    kind = splitting_type(p, field)
    target = p * p if kind == "inert" else p
    if kind == "inert":
        return (p, 0)
    b = 0
    while True:
        b += 1
        # |d| b^2 <= 4 N bounds the search; the quadratic in a does the rest.
        if field.abs_discriminant * b * b > 4 * target:
            raise ParameterError(f"no generator of norm {target} found (p={p}, d={field.d})")
        for a in _alternating(2 * math.isqrt(target) + 2):
            if field.norm(a, b) == target:
                return field.conjugate(a, b) if conjugate else (a, b)


def _alternating(bound: int) -> Iterator[int]:
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def generator_fast(p: int, field: QuadraticField) -> tuple[int, int]:
    """Some principal generator of one ideal above p, via Cornacchia.

    Any associate/conjugate works for class labelling (the class of the other
    conjugate is taken from the coordinate conjugate).  Falls back to the
    brute-force search for p = 2, ramified p, and Cornacchia misses.
    """
    kind = splitting_type(p, field)
    if kind == "inert":
        return (p, 0)
    if p > 2:
        solution = cornacchia_4p(field.abs_discriminant, p)
        if solution is not None:
            t, f = solution
            if field.half_coordinates:
                # (t + f sqrt(d))/2 = (t - f)/2 + f omega, parity guaranteed.
                return ((t - f) // 2, f)
            return (t // 2, f)
    return generator_of_prime_ideal(p, 0, field)


class RayClassGroup:
    """Classes of the residue ring modulo (n), modulo the unit image.

    Brute-force model valid for class-number-one fields: the class of a
    prime ideal coprime to the modulus is the coset of any principal
    generator.  Class 0 is the principal coset (containing 1).
    """

    def __init__(self, field: QuadraticField, modulus: int) -> None:
        if not 1 <= modulus <= MODULUS_CAP:
            raise ParameterError(f"modulus must be in [1, {MODULUS_CAP}], got {modulus}")
        self.field = field
        self.modulus = modulus
        self._classes: dict[tuple[int, int], int] = {}
        if modulus == 1:
            # Trivial group; valid for any field (no principality is used).
            self.order_residues = 1
            self.unit_image_order = 1
            self.class_count = 1
            self._reps = [(0, 0)]
            return
        if not field.class_number_one:
            raise UnsupportedFieldError(
                f"ray classes need class number one, got d = {field.d}"
            )
        n = modulus
        residues = [
            (a, b)
            for a in range(n)
            for b in range(n)
            if math.gcd(field.norm(a, b), n) == 1
        ]
        unit_image = {(u[0] % n, u[1] % n) for u in field.units()}
        assigned: dict[tuple[int, int], int] = {}
        cosets: list[list[tuple[int, int]]] = []
        for res in residues:
            if res in assigned:
                continue
            coset = sorted(
                {
                    (x % n, y % n)
                    for (x, y) in (field.multiply(res, u) for u in unit_image)
                }
            )
            index = len(cosets)
            cosets.append(coset)
            for member in coset:
                assigned[member] = index
        # Principal coset first, the rest by smallest member.
        order = sorted(range(len(cosets)), key=lambda i: ((1, 0) not in cosets[i], cosets[i][0]))
        relabel = {old: new for new, old in enumerate(order)}
        self._classes = {res: relabel[idx] for res, idx in assigned.items()}
        self._reps = [cosets[old][0] for old in order]
        self.order_residues = len(residues)
        self.unit_image_order = len(unit_image)
        self.class_count = len(cosets)

    @property
    def h_star(self) -> int:
        return self.class_count

    def class_of_residue(self, a: int, b: int) -> int:
        if self.modulus == 1:
            return 0
        key = (a % self.modulus, b % self.modulus)
        if key not in self._classes:
            raise ParameterError(f"residue {key} not coprime to the modulus")
        return self._classes[key]

    def representative(self, index: int) -> tuple[int, int]:
        return self._reps[index]

    def multiply(self, c1: int, c2: int) -> int:
        if self.modulus == 1:
            return 0
        prod = self.field.multiply(self._reps[c1], self._reps[c2])
        return self.class_of_residue(*prod)

    def power(self, c: int, m: int) -> int:
        result = self.class_of_residue(1, 0) if self.modulus > 1 else 0
        for _ in range(m):
            result = self.multiply(result, c)
        return result


@lru_cache(maxsize=32)
def ray_class_group(d: int, modulus: int) -> RayClassGroup:
    return RayClassGroup(QuadraticField(d), modulus)


def classify_terms(
    terms: list[PrimeIdealPower], group: RayClassGroup
) -> list[PrimeIdealPower]:
    """Fill class_index on each term; terms above primes dividing the modulus
    are dropped (their ideals are not coprime to the conductor)."""
    field = group.field
    n = group.modulus
    prime_class: dict[tuple[int, int], int] = {}
    out = []
    for term in terms:
        if n > 1 and n % term.p == 0:
            continue
        key = (term.p, term.conjugate)
        if key not in prime_class:
            gen = generator_fast(term.p, field)
            if term.conjugate:
                gen = field.conjugate(*gen)
            prime_class[key] = group.class_of_residue(*gen)
        cls = group.power(prime_class[key], term.exponent)
        out.append(replace(term, class_index=cls))
    return out


def psi_empirical(
    x: float,
    class_index: Optional[int],
    field: QuadraticField,
    modulus: int = 1,
) -> float:
    """Mangoldt-weighted count of prime ideal powers of norm < x.

    With class_index None the sum runs over every enumerated term (no
    coprimality filter); with a class index it runs over terms coprime to the
    modulus whose ideal-power class matches.
    """
    if x < 2:
        raise ParameterError(f"x must be >= 2, got {x}")
    terms = list(enumerate_prime_ideal_powers(x, field))
    if class_index is None:
        return math.fsum(t.weight for t in terms)
    group = ray_class_group(field.d, modulus)
    if not 0 <= class_index < group.h_star:
        raise ParameterError(f"class index {class_index} out of range")
    labelled = classify_terms(terms, group)
    return math.fsum(t.weight for t in labelled if t.class_index == class_index)


def psi_by_class(
    xs: list[float], field: QuadraticField, modulus: int
) -> dict[float, dict]:
    """Per-class cumulative sums at several cutoffs in one enumeration pass.

    Returns {x: {"classes": [psi per class], "skipped": mass at primes
    dividing the modulus, "total": unfiltered psi}} for each requested x.
    """
    xs = sorted(xs)
    group = ray_class_group(field.d, modulus)
    terms = list(enumerate_prime_ideal_powers(xs[-1], field))
    if modulus == 1:
        label_at = {(t.p, t.conjugate, t.exponent): 0 for t in terms}
    else:
        labelled = classify_terms(terms, group)
        label_at = {(t.p, t.conjugate, t.exponent): t.class_index for t in labelled}
    results: dict[float, dict] = {}
    sums = [0.0] * group.h_star
    skipped = 0.0
    total = 0.0
    i = 0
    for x in xs:
        while i < len(terms) and terms[i].norm_power < x:
            t = terms[i]
            total += t.weight
            cls = label_at.get((t.p, t.conjugate, t.exponent))
            if cls is None:
                skipped += t.weight
            else:
                sums[cls] += t.weight
            i += 1
        results[x] = {
            "classes": list(sums),
            "skipped": skipped,
            "total": total,
        }
    return results


def big_psi_empirical(
    x: float,
    class_index: Optional[int],
    field: QuadraticField,
    modulus: int = 1,
) -> float:
    """Windowed sum over x <= norm <= 2x, both endpoints included."""
    if x < 2:
        raise ParameterError(f"x must be >= 2, got {x}")
    terms = [
        t
        for t in enumerate_prime_ideal_powers(2 * x + 1, field)
        if x <= t.norm_power <= 2 * x
    ]
    if class_index is None:
        return math.fsum(t.weight for t in terms)
    group = ray_class_group(field.d, modulus)
    labelled = classify_terms(terms, group)
    return math.fsum(t.weight for t in labelled if t.class_index == class_index)


def logderiv_empirical(
    sigma: float,
    t: float,
    field: QuadraticField,
    x_cut: float,
) -> tuple[complex, float]:
    """Truncated -zeta'/zeta(s) of the field (principal character, trivial
    conductor) plus a rigorous tail bound.

    value = -sum over norm powers n < x_cut of weight * n^(-s), s = sigma+it.
    The tail uses: ideal mass at a rational n is at most 2 log n, and
    log(u) u^(-sigma) is decreasing on [x_cut, inf), so

        |tail| <= 2 (log X X^-sigma + X^(1-sigma)(log X/(sigma-1) + 1/(sigma-1)^2)).
    """
    if sigma < 1.5:
        raise ParameterError(f"sigma must be >= 1.5 for tail control, got {sigma}")
    if x_cut < 1e3:
        raise ParameterError(f"x_cut must be >= 1e3, got {x_cut}")
    terms = list(enumerate_prime_ideal_powers(x_cut, field))
    norms = np.array([term.norm_power for term in terms], dtype=np.float64)
    weights = np.array([term.weight for term in terms], dtype=np.float64)
    s = complex(sigma, t)
    value = -np.sum(weights * np.exp(-s * np.log(norms))) if len(terms) else 0.0 + 0.0j
    log_x = math.log(x_cut)
    tail = 2.0 * (
        log_x * x_cut**-sigma
        + x_cut ** (1.0 - sigma) * (log_x / (sigma - 1.0) + 1.0 / (sigma - 1.0) ** 2)
    )
    return complex(value), tail
