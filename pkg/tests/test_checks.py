import math

import pytest

from pitbounds.bounds import DEFAULT_CONTEXT, substitution_floor_log_x
from pitbounds.checks import (
    check_inverse_powers,
    check_majorant_substitution,
    check_tail_integral_bounds,
    default_grid,
    run_grid,
    substitution_height,
)
from pitbounds.errors import ThresholdError
from pitbounds.fields import CharacterKind, FieldParameters, NONPRINCIPAL


def by_name(reports, name):
    return next(r for r in reports if r.check_name == name)


@pytest.fixture(scope="module")
def tail_reports():
    return check_tail_integral_bounds(
        FieldParameters(9), 1.0, CharacterKind(0, 0), DEFAULT_CONTEXT
    )


class TestTailBounds:
    @pytest.fixture
    def reports(self, tail_reports):
        return tail_reports

    def test_all_pass(self, reports):
        assert len(reports) == 6
        assert all(r.passed for r in reports)

    def test_inverse_square_is_equality(self, reports):
        r = by_name(reports, "tail_inverse_square")
        assert r.measured_value == pytest.approx(r.bound_value, rel=1e-9)
        assert abs(r.slack) <= 1e-8

    def test_log_bound_values(self, reports):
        r = by_name(reports, "tail_log")
        assert r.measured_value == pytest.approx(1.25 * math.log(5.0), rel=1e-8)
        assert r.bound_value == pytest.approx(1.0 + math.log(5.0), rel=1e-12)
        assert r.slack > 0.5

    def test_conductor_log_closed_form(self, reports):
        # Oracle: log 9 * 1 + 2 A0 * (2 log 2) from the exact antiderivative.
        r = by_name(reports, "tail_conductor_log")
        oracle = math.log(9.0) + 2.0 * 0.7761 * 2.0 * math.log(2.0)
        assert r.measured_value == pytest.approx(oracle, rel=1e-8)
        assert r.bound_value == pytest.approx(
            1.09 * math.log(9.0) * (1.0 + math.log(5.0)), rel=1e-12
        )
        assert r.slack > 1.8

    def test_majorant_bounds_have_room(self, reports):
        principal = by_name(reports, "tail_majorant_principal")
        nonprincipal = by_name(reports, "tail_majorant_nonprincipal")
        assert principal.slack / principal.bound_value > 0.3
        assert nonprincipal.slack / nonprincipal.bound_value > 0.3

    def test_imprimitive_still_passes(self):
        reports = check_tail_integral_bounds(
            FieldParameters(9, 1, 5),
            1.0,
            CharacterKind(0, 1),
            which=["majorant_nonprincipal"],
        )
        (r,) = reports
        assert r.passed


class TestSubstitution:
    def test_height_example(self):
        params = FieldParameters(9)
        T = substitution_height(600.0, params, NONPRINCIPAL, DEFAULT_CONTEXT)
        assert T + 1.0 == pytest.approx(2.3601827730112688, rel=1e-12)
        # Oracle: c0 * exp(sqrt(600/116)).
        c0 = 9 ** (-1.0 / (2 * 0.7761))
        assert T + 1.0 == pytest.approx(c0 * math.exp(math.sqrt(600.0 / 116.0)), rel=1e-12)

    def test_boundary_height_is_two(self):
        params = FieldParameters(9)
        floor = substitution_floor_log_x(params)
        T = substitution_height(floor, params, NONPRINCIPAL, DEFAULT_CONTEXT)
        assert T + 1.0 == pytest.approx(2.0, rel=1e-12)

    def test_reports_pass(self):
        params = FieldParameters(9)
        reports = check_majorant_substitution(600.0, params)
        assert len(reports) == 4
        assert all(r.passed for r in reports)
        majorant = by_name(reports, "substituted_majorant_nonprincipal")
        assert majorant.slack > 0.0

    def test_identity_holds_exactly(self):
        params = FieldParameters(9, 1, 5)
        floor = substitution_floor_log_x(params)
        reports = check_majorant_substitution(floor * 1.3, params)
        for label in ("principal", "nonprincipal"):
            identity = by_name(reports, f"substitution_identity_{label}")
            assert identity.measured_value <= 1e-12 * max(identity.bound_value, 1.0)

    def test_below_floor_raises(self):
        with pytest.raises(ThresholdError):
            check_majorant_substitution(100.0, FieldParameters(9))


class TestInversePowers:
    def test_equality_at_floor(self):
        params = FieldParameters(9)
        floor = substitution_floor_log_x(params)
        reports = check_inverse_powers(floor, params, NONPRINCIPAL, k=1)
        power = by_name(reports, "inverse_power_k1")
        assert power.measured_value == pytest.approx(power.bound_value, rel=1e-9)
        assert power.passed

    def test_higher_powers(self):
        params = FieldParameters(9)
        for k in (1, 2, 3):
            reports = check_inverse_powers(600.0, params, NONPRINCIPAL, k=k)
            assert all(r.passed for r in reports)

    def test_below_floor_raises(self):
        with pytest.raises(ThresholdError):
            check_inverse_powers(10.0, FieldParameters(9), NONPRINCIPAL)


class TestGridRunner:
    def test_small_grid_passes_and_is_deterministic(self):
        grid = {
            "T": [1, 10],
            "r2": [1, 2],
            "abs_discriminant": [9, 163],
            "conductor_norm": [1, 5],
            "E0": [0, 1],
            "eps_chi": [0, 1],
            "eta": 0.25,
            "w": 58.0,
            "log_x_factors": [1.0, 2.0],
            "inverse_k": [1, 3],
        }
        first = run_grid(grid)
        second = run_grid(grid)
        assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
        assert all(r.passed for r in first)
        assert len(first) > 100

    def test_default_grid_is_large(self):
        grid = default_grid()
        combos = (
            len(grid["T"])
            * len(grid["r2"])
            * len(grid["abs_discriminant"])
            * len(grid["conductor_norm"])
            * len(grid["E0"])
            * len(grid["eps_chi"])
        )
        assert combos >= 300
