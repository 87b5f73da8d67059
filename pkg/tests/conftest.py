import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent))

from positroid_lab.chordclass import DecoratedPermutation, parse_decorated  # noqa: E402
from positroid_lab.permcore import Permutation  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

# the running nine-vertex example with one loop of each orientation
EX_NINE = "5,7,3-,6,4,9,2,8+,1"
# the six-vertex example realized by a 2 x 6 matrix; loop at 1 is counterclockwise
EX_SIX = "1-,3,6,5,2,4"
EX_SIX_MATRIX = [[0, 3, 1, -2, 2, 0], [0, 0, 0, 1, -1, 1]]
EX_SIX_BASES = {(2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6)}
EX_SIX_NECKLACE = ((2, 4), (2, 4), (3, 4), (4, 6), (5, 6), (2, 6))
EX_NINE_NECKLACE = (
    (1, 2, 4, 8), (2, 4, 5, 8), (4, 5, 7, 8), (4, 5, 7, 8), (5, 6, 7, 8),
    (4, 6, 7, 8), (4, 7, 8, 9), (2, 4, 8, 9), (2, 4, 8, 9),
)


@st.composite
def decorated_perms(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    w = draw(st.permutations(range(1, n + 1)))
    fixed = [i for i, x in enumerate(w, 1) if i == x]
    cw = draw(st.sets(st.sampled_from(fixed))) if fixed else set()
    return DecoratedPermutation(Permutation(tuple(w)), frozenset(cw))


@st.composite
def perms(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@pytest.fixture
def ex_nine():
    return parse_decorated(EX_NINE)


@pytest.fixture
def ex_six():
    return parse_decorated(EX_SIX)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
