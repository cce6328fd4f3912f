import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from complete_numbers import CompleteNumber, Complex, IndexedComplex, Index, Rational  # noqa: E402


def rationals(bound=50):
    return st.builds(
        lambda n, d: Rational(n, d),
        st.integers(-bound, bound),
        st.integers(1, bound),
    )


def complexes(bound=50):
    return st.builds(Complex, rationals(bound), rationals(bound))


def completes(bound=50):
    return st.builds(CompleteNumber, complexes(bound), complexes(bound))


def indexed(bound=50):
    return st.builds(IndexedComplex, st.sampled_from(list(Index)), complexes(bound))


@pytest.fixture
def C():
    def make(re, im=0):
        return Complex(Rational(re), Rational(im))

    return make


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion, then assert."""

    def record(number, description, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {status}  {description}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
