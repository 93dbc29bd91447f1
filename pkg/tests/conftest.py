import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from barcodekit.barcode import INF, Bar, Barcode

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# dyadic endpoints keep every sum and difference exact
dyadic = st.integers(min_value=-64, max_value=64).map(lambda n: n / 8)


@st.composite
def bars(draw, degree=None):
    a = draw(dyadic)
    if draw(st.booleans()):
        return Bar(a, INF, degree)
    length = draw(st.integers(min_value=1, max_value=64)) / 8
    return Bar(a, a + length, degree)


@st.composite
def barcodes(draw, max_size=4, graded=False):
    n = draw(st.integers(min_value=0, max_value=max_size))
    out = []
    for _ in range(n):
        degree = draw(st.integers(min_value=0, max_value=1)) if graded else None
        out.append(draw(bars(degree)))
    return Barcode(out)


@pytest.fixture
def data_dir():
    return Path(__file__).resolve().parents[1] / "src" / "barcodekit" / "data"
