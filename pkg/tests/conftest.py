import pytest

from grepunit.arith import GrepunitParams, validate
from grepunit.errors import InvalidParametersError

GRID_A = range(1, 61)
GRID_B = range(2, 6)
GRID_N = range(2, 6)


def grid_triples():
    """Full grid in sweep order, valid or not."""
    for b in GRID_B:
        for n in GRID_N:
            for a in GRID_A:
                yield a, b, n


@pytest.fixture(scope="session")
def grid() -> list[GrepunitParams]:
    """Every valid parameter triple of the standard test grid."""
    points = []
    for a, b, n in grid_triples():
        try:
            points.append(validate(a, b, n))
        except InvalidParametersError:
            continue
    return points
