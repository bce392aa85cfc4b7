from fractions import Fraction

import pytest
from hypothesis import strategies as st

import impact_vitality as ivm


def naive_iv(counts):
    """Formula transcribed term by term in Fractions; independent of the library."""
    n = len(counts)
    total = sum(counts)
    weighted = sum(Fraction(c, i) for i, c in enumerate(counts, start=1))
    harmonic = sum(Fraction(1, i) for i in range(1, n + 1))
    return (n * weighted / total - 1) / (harmonic - 1)


def windows(max_n=40, max_count=10_000, positive=True):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        counts = draw(st.lists(st.integers(0, max_count), min_size=n, max_size=n))
        if positive and sum(counts) == 0:
            counts[draw(st.integers(0, n - 1))] = draw(st.integers(1, max_count))
        return ivm.CountsWindow(2006, tuple(counts))

    return build()


@pytest.fixture
def fixture_cohort():
    return ivm.load_fixture_cohort()


@pytest.fixture
def fixture_files():
    return str(ivm.fixture_path("counts")), str(ivm.fixture_path("profiles"))
