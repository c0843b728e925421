import pytest

from pitbounds.fields import FieldParameters


@pytest.fixture
def params9() -> FieldParameters:
    """Minimal admissible parameter set (|disc| = 9, everything else 1)."""
    return FieldParameters(9)


@pytest.fixture
def param_grid() -> list[FieldParameters]:
    return [
        FieldParameters(d, r2, nf, h)
        for d in (9, 40, 163, 10**6)
        for r2 in (1, 2, 3)
        for nf in (1, 5, 97)
        for h in (1, 2)
    ]
