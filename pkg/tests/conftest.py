import pathlib
from fractions import Fraction

import pytest

from shodvar.linalg import QMat
from shodvar.quiver import parse_quiver_file
from shodvar.rep import rep_from_dict

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def make_interval(q, lo: int, hi: int):
    """Interval module on a linear quiver with integer-named vertices.

    Supported on vertices lo..hi with identity arrow maps inside; the
    caller is responsible for the interval avoiding killed composites.
    """
    dims = {v: (1 if lo <= int(v) <= hi else 0) for v in q.vertices}
    mats = {}
    for a in q.arrows:
        if lo <= int(a.source) and int(a.target) <= hi:
            mats[a.name] = QMat(1, 1, [[Fraction(1)]])
    return rep_from_dict(q, dims, mats)


def hom_interval_oracle(i, j, k, l) -> int:
    """dim Hom([i,j], [k,l]) on a linear quiver: 1 iff k <= i <= l <= j."""
    return 1 if (k <= i <= l <= j) else 0


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def a2():
    return parse_quiver_file(FIXTURES / "a2.quiver")


@pytest.fixture(scope="session")
def a3r():
    return parse_quiver_file(FIXTURES / "a3r.quiver")


@pytest.fixture(scope="session")
def n4():
    return parse_quiver_file(FIXTURES / "n4.quiver")
