import math

import pytest

from pitbounds.errors import ParameterError
from pitbounds.fields import (
    CONSTANTS,
    NONPRINCIPAL,
    PRINCIPAL,
    CharacterKind,
    FieldParameters,
    contour_scale,
    log_conductor,
    root_conductor,
    zero_free_sigma,
)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        FieldParameters(8)
    with pytest.raises(ParameterError):
        FieldParameters(9, r2=0)
    with pytest.raises(ParameterError):
        FieldParameters(9, conductor_norm=0)
    with pytest.raises(ParameterError):
        FieldParameters(9, class_number=0)
    with pytest.raises(ParameterError):
        CharacterKind(2, 0)


def test_derived_constants():
    assert CONSTANTS.B == pytest.approx(0.01325, abs=0)  # exact quotient A1/6
    assert CONSTANTS.B == CONSTANTS.A1 / 6.0
    assert CONSTANTS.w_max == pytest.approx(58.5735849, abs=1e-6)


def test_log_conductor_at_zero(params9):
    value = log_conductor(0.0, params9)
    assert value == pytest.approx(math.log(9), rel=1e-15)
    assert value == pytest.approx(2.1972245773362196, rel=1e-12)


def test_log_conductor_principal_ignores_conductor():
    base = log_conductor(0.7, FieldParameters(9, 1, 1), PRINCIPAL)
    for nf in (2, 5, 97):
        assert log_conductor(0.7, FieldParameters(9, 1, nf), PRINCIPAL) == base


def test_log_conductor_example():
    # log 9 + A0 log 20, t = 1, conductor norm 5.
    value = log_conductor(1.0, FieldParameters(9, 1, 5), NONPRINCIPAL)
    oracle = math.log(9) + CONSTANTS.A0 * math.log(20)
    assert value == pytest.approx(oracle, rel=1e-15)
    assert value == pytest.approx(4.522212394841472, rel=1e-12)


def test_log_conductor_monotone(param_grid):
    for params in param_grid:
        values = [log_conductor(t, params) for t in (0.0, 0.5, 1.0, 10.0, 1e4)]
        assert values == sorted(values)
        assert values[0] >= 2.097
    # Monotone in |disc| and conductor norm at fixed t.
    for nf in (1, 5):
        discs = [log_conductor(1.0, FieldParameters(d, 1, nf)) for d in (9, 40, 163)]
        assert discs == sorted(discs)
    norms = [log_conductor(1.0, FieldParameters(9, 1, nf)) for nf in (1, 5, 97)]
    assert norms == sorted(norms)


def test_zero_free_sigma_values(params9):
    assert zero_free_sigma(0.0, params9) == pytest.approx(0.9638179907415833, rel=1e-12)
    # Infimum at the minimal log-conductor matches the printed edge constant.
    assert abs((1.0 - CONSTANTS.A1 / 2.097) - CONSTANTS.A2) <= 2e-6


def test_zero_free_sigma_structure(params9, param_grid):
    for params in param_grid:
        prev = None
        for t in (0.0, 1.0, 10.0, 1e3, 1e9):
            sigma = zero_free_sigma(t, params)
            assert sigma < 1.0
            assert sigma >= CONSTANTS.A2 - 1e-6
            # Complement is exactly A1/L.
            gap = CONSTANTS.A1 / log_conductor(t, params)
            assert 1.0 - sigma == pytest.approx(gap, rel=1e-15)
            if prev is not None:
                assert sigma >= prev
            prev = sigma
    assert zero_free_sigma(1e12, params9) > 0.998


def test_root_conductor_values():
    assert root_conductor(FieldParameters(9)) == pytest.approx(3 / (2 * math.pi), rel=1e-15)
    assert root_conductor(FieldParameters(9, 1, 4)) == pytest.approx(6 / (2 * math.pi), rel=1e-15)
    base = root_conductor(FieldParameters(9, 1, 7))
    assert root_conductor(FieldParameters(9, 1, 14)) == pytest.approx(
        base * math.sqrt(2), rel=1e-15
    )


def test_contour_scale_values(params9):
    assert contour_scale(params9) == pytest.approx(0.24279081050712234, rel=1e-12)
    # Oracle: direct power evaluation.
    assert contour_scale(params9) == pytest.approx(
        9 ** (-1.0 / (2 * CONSTANTS.A0)), rel=1e-14
    )
    scaled = contour_scale(FieldParameters(9, 1, 5))
    assert scaled == pytest.approx(0.24279081050712234 / math.sqrt(5), rel=1e-12)


def test_contour_scale_principal_and_bound(param_grid):
    for params in param_grid:
        assert contour_scale(params, PRINCIPAL) == pytest.approx(
            contour_scale(FieldParameters(params.abs_discriminant, params.r2, 1)),
            rel=1e-14,
        )
        assert 0.0 < contour_scale(params) <= 1.0
