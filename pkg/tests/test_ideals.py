import math

import pytest

from pitbounds.errors import ParameterError, UnsupportedFieldError
from pitbounds.ideals import (
    QuadraticField,
    big_psi_empirical,
    classify_terms,
    enumerate_prime_ideal_powers,
    generator_fast,
    generator_of_prime_ideal,
    logderiv_empirical,
    psi_by_class,
    psi_empirical,
    ray_class_group,
    splitting_type,
)
from pitbounds.arith import sieve


GAUSSIAN = QuadraticField(-1)


def naive_split(p: int, disc: int) -> str:
    """Independent splitting oracle: solvability of x^2 = disc (mod p/4p)."""
    if p == 2:
        if disc % 2 == 0:
            return "ramified"
        return "split" if disc % 8 == 1 else "inert"
    if disc % p == 0:
        return "ramified"
    return "split" if any((x * x - disc) % p == 0 for x in range(p)) else "inert"


class TestField:
    def test_invariants(self):
        assert GAUSSIAN.discriminant == -4
        assert GAUSSIAN.unit_count == 4
        assert QuadraticField(-3).unit_count == 6
        assert QuadraticField(-7).discriminant == -7
        assert QuadraticField(-7).unit_count == 2
        assert QuadraticField(-163).class_number_one
        assert not QuadraticField(-5).class_number_one

    def test_rejects_bad_d(self):
        with pytest.raises(ParameterError):
            QuadraticField(5)
        with pytest.raises(ParameterError):
            QuadraticField(-4)  # not squarefree
        with pytest.raises(ParameterError):
            QuadraticField(-12)

    def test_norm_forms(self):
        assert GAUSSIAN.norm(2, 1) == 5
        assert QuadraticField(-7).norm(-1, 2) == 7
        assert QuadraticField(-3).norm(1, 1) == 3
        # Norm is multiplicative.
        k = QuadraticField(-7)
        x, y = (3, 2), (1, -4)
        assert k.norm(*k.multiply(x, y)) == k.norm(*x) * k.norm(*y)


class TestSplitting:
    def test_examples(self):
        assert splitting_type(5, GAUSSIAN) == "split"
        assert splitting_type(2, GAUSSIAN) == "ramified"
        assert splitting_type(3, GAUSSIAN) == "inert"
        assert splitting_type(2, QuadraticField(-7)) == "split"  # disc = -7 = 1 mod 8
        assert splitting_type(7, QuadraticField(-7)) == "ramified"

    def test_against_naive_oracle(self):
        for d in (-1, -2, -3, -7, -11, -43):
            field = QuadraticField(d)
            for p in (int(q) for q in sieve(500)):
                assert splitting_type(p, field) == naive_split(p, field.discriminant)

    def test_rejects_composite(self):
        with pytest.raises(ParameterError):
            splitting_type(10, GAUSSIAN)


class TestEnumeration:
    def test_small_gaussian(self):
        terms = list(enumerate_prime_ideal_powers(10, GAUSSIAN))
        assert [t.norm_power for t in terms] == [2, 4, 5, 5, 8, 9]
        assert [t.split_type for t in terms] == [
            "ramified", "ramified", "split", "split", "ramified", "inert",
        ]
        mass = math.fsum(t.weight for t in terms)
        assert mass == pytest.approx(3 * math.log(2) + 2 * math.log(5) + math.log(9), rel=1e-14)

    def test_empty_below_two(self):
        assert list(enumerate_prime_ideal_powers(2, GAUSSIAN)) == []

    def test_sorted_with_tie_breaks(self):
        terms = list(enumerate_prime_ideal_powers(3000, GAUSSIAN))
        keys = [(t.norm_power, t.p, t.conjugate, t.exponent) for t in terms]
        assert keys == sorted(keys)

    def test_split_terms_come_in_pairs(self):
        terms = list(enumerate_prime_ideal_powers(5000, QuadraticField(-7)))
        split = [t for t in terms if t.split_type == "split"]
        assert len(split) % 2 == 0
        by_key = {}
        for t in split:
            by_key.setdefault((t.p, t.exponent), []).append(t.conjugate)
        assert all(sorted(v) == [0, 1] for v in by_key.values())

    def test_matches_naive_per_prime_loop(self):
        # Independent oracle: direct loop over primes and exponents.  The
        # splitting rule itself is cross-checked against the quadratic-residue
        # scan above; here it is evaluated with a plain Euler-criterion pow so
        # the loop stays fast at 1e5.
        def fast_split(p: int, disc: int) -> str:
            if p == 2:
                if disc % 2 == 0:
                    return "ramified"
                return "split" if disc % 8 == 1 else "inert"
            if disc % p == 0:
                return "ramified"
            return "split" if pow(disc % p, (p - 1) // 2, p) == 1 else "inert"

        for d in (-1, -7):
            field = QuadraticField(d)
            x_max = 10**5
            expected = 0.0
            for p in (int(q) for q in sieve(x_max)):
                kind = fast_split(p, field.discriminant)
                norm = p * p if kind == "inert" else p
                multiplicity = 2 if kind == "split" else 1
                power = norm
                while power < x_max:
                    expected += multiplicity * math.log(norm)
                    power *= norm
            assert psi_empirical(x_max, None, field) == pytest.approx(expected, rel=1e-12)


class TestGenerators:
    def test_examples(self):
        assert generator_of_prime_ideal(5, 0, GAUSSIAN) == (2, 1)
        assert generator_of_prime_ideal(5, 1, GAUSSIAN) == (2, -1)
        assert generator_of_prime_ideal(3, 0, GAUSSIAN) == (3, 0)
        assert generator_of_prime_ideal(7, 0, QuadraticField(-7)) == (-1, 2)

    def test_norm_is_correct(self):
        for d in (-1, -2, -3, -7, -11, -19, -43, -67, -163):
            field = QuadraticField(d)
            for p in (int(q) for q in sieve(200)):
                kind = splitting_type(p, field)
                gen = generator_of_prime_ideal(p, 0, field)
                expected = p * p if kind == "inert" else p
                assert field.norm(*gen) == expected

    def test_fast_path_generates_same_ideal(self):
        # The Cornacchia generator equals the brute-force one up to units and
        # conjugation: gen_fast * conj(gen_brute) or gen_fast * gen_brute must
        # be divisible by p with unit quotient norm.
        for d in (-1, -2, -3, -7, -11, -163):
            field = QuadraticField(d)
            for p in (int(q) for q in sieve(1000)):
                if splitting_type(p, field) == "inert":
                    continue
                fast = generator_fast(p, field)
                assert field.norm(*fast) == p
                brute = generator_of_prime_ideal(p, 0, field)
                same_ideal = False
                for candidate in (brute, field.conjugate(*brute)):
                    prod = field.multiply(fast, field.conjugate(*candidate))
                    if prod[0] % p == 0 and prod[1] % p == 0:
                        quotient = (prod[0] // p, prod[1] // p)
                        same_ideal |= field.norm(*quotient) == 1
                assert same_ideal, (d, p)

    def test_unsupported_field(self):
        with pytest.raises(UnsupportedFieldError):
            generator_of_prime_ideal(3, 0, QuadraticField(-5))


class TestRayClasses:
    def test_gaussian_orders(self):
        g1 = ray_class_group(-1, 1)
        assert g1.h_star == 1
        g3 = ray_class_group(-1, 3)
        assert (g3.order_residues, g3.unit_image_order, g3.h_star) == (8, 4, 2)
        g5 = ray_class_group(-1, 5)
        assert (g5.order_residues, g5.unit_image_order, g5.h_star) == (16, 4, 4)

    def test_lagrange(self):
        for d in (-1, -3, -7, -11):
            for n in range(2, 13):
                g = ray_class_group(d, n)
                assert g.h_star * g.unit_image_order == g.order_residues

    def test_principal_class_is_zero(self):
        for d, n in ((-1, 3), (-1, 5), (-7, 3), (-3, 7)):
            g = ray_class_group(d, n)
            assert g.class_of_residue(1, 0) == 0

    def test_known_class_assignment(self):
        # 2+i is a non-square in the residue field mod 3: non-principal class.
        g3 = ray_class_group(-1, 3)
        assert g3.class_of_residue(2, 1) == 1
        assert g3.class_of_residue(2, 2) == 1  # the conjugate 2-i
        assert g3.class_of_residue(2, 0) == 0  # unit image

    def test_homomorphism_exhaustive(self):
        for d, n in ((-1, 3), (-1, 5), (-1, 8), (-7, 3), (-7, 5), (-3, 5)):
            g = ray_class_group(d, n)
            field = g.field
            residues = [
                (a, b)
                for a in range(n)
                for b in range(n)
                if math.gcd(field.norm(a, b), n) == 1
            ]
            for x in residues:
                for y in residues:
                    prod = field.multiply(x, y)
                    assert g.class_of_residue(*prod) == g.multiply(
                        g.class_of_residue(*x), g.class_of_residue(*y)
                    )

    def test_power_matches_repeated_multiplication(self):
        g = ray_class_group(-1, 5)
        for c in range(g.h_star):
            acc = 0
            for m in range(1, 6):
                acc = g.multiply(acc, c)
                assert g.power(c, m) == acc

    def test_noncoprime_residue_rejected(self):
        g = ray_class_group(-1, 3)
        with pytest.raises(ParameterError):
            g.class_of_residue(0, 0)

    def test_modulus_cap(self):
        with pytest.raises(ParameterError):
            ray_class_group(-1, 10**4 + 1)

    def test_class_number_one_required(self):
        with pytest.raises(UnsupportedFieldError):
            ray_class_group(-5, 3)
        # Trivial modulus works for any field.
        assert ray_class_group(-5, 1).h_star == 1


class TestClassifiedSums:
    def test_hand_anchor(self):
        assert psi_empirical(10, None, GAUSSIAN) == pytest.approx(
            3 * math.log(2) + 2 * math.log(5) + math.log(9), rel=1e-14
        )

    def test_per_class_hand_values(self):
        # Modulo 3: the ideal over 3 is dropped, the ramified ideal over 2 and
        # both ideals over 5 sit in the non-principal class, so class 0 only
        # collects the square of the ramified ideal (norm 4).
        assert psi_empirical(10, 0, GAUSSIAN, 3) == pytest.approx(math.log(2), rel=1e-14)
        assert psi_empirical(10, 1, GAUSSIAN, 3) == pytest.approx(
            2 * math.log(2) + 2 * math.log(5), rel=1e-14
        )

    def test_partition_identity(self):
        for d, n, x in ((-1, 3, 1000), (-1, 5, 1000), (-7, 3, 2000)):
            field = QuadraticField(d)
            data = psi_by_class([x], field, n)[x]
            assert math.fsum(data["classes"]) + data["skipped"] == pytest.approx(
                data["total"], rel=1e-12
            )
            assert data["total"] == pytest.approx(
                psi_empirical(x, None, field), rel=1e-12
            )

    def test_class_of_power_is_power_of_class(self):
        field = GAUSSIAN
        group = ray_class_group(-1, 5)
        terms = [
            t for t in enumerate_prime_ideal_powers(10**4, field) if t.p % 5 != 0
        ]
        labelled = classify_terms(terms, group)
        first_power = {
            (t.p, t.conjugate): t.class_index for t in labelled if t.exponent == 1
        }
        for t in labelled:
            base = first_power[(t.p, t.conjugate)]
            assert t.class_index == group.power(base, t.exponent)

    def test_window_sum(self):
        assert big_psi_empirical(4, None, GAUSSIAN) == pytest.approx(
            2 * math.log(2) + 2 * math.log(5), rel=1e-14
        )
        # Empty window: between 11 and 22 for d = -43 there is... compute via
        # the cumulative identity instead; windows are never empty here, so
        # check the reconciliation identity on a few x.
        for x in (4, 10, 50, 1000):
            window = big_psi_empirical(x, None, GAUSSIAN)
            cumulative = psi_empirical(2 * x, None, GAUSSIAN) - psi_empirical(
                x, None, GAUSSIAN
            )
            endpoint_mass = sum(
                t.weight
                for t in enumerate_prime_ideal_powers(2 * x + 1, GAUSSIAN)
                if t.norm_power == 2 * x
            )
            assert window == pytest.approx(cumulative + endpoint_mass, rel=1e-12)

    def test_equidistribution_small_scale(self):
        data = psi_by_class([10**3, 10**4], GAUSSIAN, 3)
        for x, row in data.items():
            for value in row["classes"]:
                assert abs(value / x - 0.5) < 0.1

    def test_pit_sanity_both_fields(self):
        for d in (-1, -7):
            x = 10**6
            psi = psi_empirical(x, None, QuadraticField(d))
            assert abs(psi / x - 1.0) <= 0.02


class TestLogderiv:
    def test_real_at_t_zero(self):
        value, tail = logderiv_empirical(1.5, 0.0, GAUSSIAN, 1e4)
        assert value.imag == 0.0
        assert tail > 0.0

    def test_fast_convergence_at_s3(self):
        value, tail = logderiv_empirical(3.0, 0.0, GAUSSIAN, 1e4)
        assert tail < 1e-3
        # Oracle: direct scalar summation over the same terms.
        direct = -math.fsum(
            t.weight * t.norm_power**-3.0
            for t in enumerate_prime_ideal_powers(1e4, GAUSSIAN)
        )
        assert value.real == pytest.approx(direct, rel=1e-12)

    def test_tail_bound_dominates_true_tail(self):
        # Extending the cut changes the value by less than the claimed tail.
        short, tail_short = logderiv_empirical(1.5, 0.0, GAUSSIAN, 1e3)
        long, _ = logderiv_empirical(1.5, 0.0, GAUSSIAN, 1e5)
        assert abs(long - short) <= tail_short

    def test_domain(self):
        with pytest.raises(ParameterError):
            logderiv_empirical(1.2, 0.0, GAUSSIAN, 1e4)
        with pytest.raises(ParameterError):
            logderiv_empirical(1.5, 0.0, GAUSSIAN, 10.0)
