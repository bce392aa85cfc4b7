from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from impact_vitality import (
    CountsWindow,
    Undefined,
    UndefinedReason,
    WindowTooShortError,
    harmonic_sum,
    impact_vitality,
    impact_vitality_exact,
    iv_upper_bound,
    iv_upper_bound_exact,
)

from conftest import naive_iv, windows


def iv(counts):
    return impact_vitality(CountsWindow(2004, tuple(counts)))


def test_harmonic_sum():
    assert harmonic_sum(1) == 1.0
    assert harmonic_sum(2) == 1.5
    assert harmonic_sum(3) == pytest.approx(11 / 6, abs=1e-15)
    with pytest.raises(ValueError):
        harmonic_sum(0)


@pytest.mark.parametrize("n", [1, 5, 17, 40, 200])
def test_harmonic_sum_matches_rational(n):
    exact = sum(Fraction(1, i) for i in range(1, n + 1))
    assert harmonic_sum(n) == pytest.approx(float(exact), rel=1e-15)


@pytest.mark.parametrize(
    "counts, expected",
    [
        ((3, 2, 1), Fraction(7, 5)),
        ((1, 2, 3), Fraction(3, 5)),
        ((5, 0), Fraction(2)),
        ((0, 0, 7), Fraction(0)),
        ((1, 0), Fraction(2)),
        ((3, 2, 1, 0), Fraction(68, 39)),
        ((3, 2, 2), Fraction(6, 5)),
        ((4, 4, 4, 4), Fraction(1)),
    ],
)
def test_spot_values(counts, expected):
    assert naive_iv(counts) == expected
    assert impact_vitality_exact(counts) == expected
    result = iv(counts)
    assert result.defined
    assert result.iv == pytest.approx(float(expected), abs=1e-12)
    assert (result.y1, result.n) == (2004, len(counts))


def test_all_oldest_is_exactly_zero():
    assert iv((0, 0, 7)).iv == 0.0
    assert iv((0,) * 39 + (9999,)).iv == 0.0


def test_zero_total_is_undefined():
    result = iv((0, 0, 0))
    assert isinstance(result, Undefined)
    assert not result.defined
    assert result.reason is UndefinedReason.NO_CITING_PUBLICATIONS
    assert isinstance(impact_vitality_exact((0, 0)), Undefined)


@pytest.mark.parametrize("counts", [(), (5,)])
def test_short_window_rejected(counts):
    with pytest.raises(WindowTooShortError) as info:
        CountsWindow(2004, counts)
    assert info.value.reason is UndefinedReason.WINDOW_TOO_SHORT


@pytest.mark.parametrize("counts", [(1, -1), (1.0, 2), (True, 1)])
def test_bad_counts_rejected(counts):
    with pytest.raises((ValueError, TypeError)):
        CountsWindow(2004, counts)


def test_window_years():
    w = CountsWindow(2004, (3, 2, 1))
    assert w.years == (2004, 2003, 2002)
    assert w.total == 6


def test_upper_bound():
    assert iv_upper_bound(2) == 2.0
    assert iv_upper_bound(3) == pytest.approx(2.4, abs=1e-15)
    assert iv_upper_bound_exact(3) == Fraction(12, 5)
    for n in range(2, 100):
        assert iv_upper_bound(n) > 1
    with pytest.raises(WindowTooShortError):
        iv_upper_bound(1)


@pytest.mark.parametrize("n", range(2, 51))
def test_uniform_is_one(n):
    for c in (1, 3, 10, 1000):
        assert iv((c,) * n).iv == pytest.approx(1.0, abs=1e-12)
        assert impact_vitality_exact((c,) * n) == 1


@given(windows())
def test_bounds(w):
    value = impact_vitality(w).iv
    assert 0.0 <= value <= iv_upper_bound(w.n)
    exact = impact_vitality_exact(w)
    assert (exact == 0) == all(c == 0 for c in w.counts[:-1])
    assert (exact == iv_upper_bound_exact(w.n)) == all(c == 0 for c in w.counts[1:])


@given(st.integers(2, 40), st.integers(1, 10_000))
def test_extremes(n, c):
    recent = CountsWindow(2006, (c,) + (0,) * (n - 1))
    oldest = CountsWindow(2006, (0,) * (n - 1) + (c,))
    assert impact_vitality(recent).iv == pytest.approx(iv_upper_bound(n), abs=1e-12)
    assert impact_vitality(oldest).iv == 0.0


@given(windows())
def test_oracle_equivalence(w):
    exact = impact_vitality_exact(w)
    assert exact == naive_iv(w.counts)
    assert impact_vitality(w).iv == pytest.approx(float(exact), abs=1e-9)


@given(windows(), st.integers(1, 1000))
def test_scale_invariance(w, k):
    assert impact_vitality_exact(w.scaled(k)) == impact_vitality_exact(w)
    assert impact_vitality(w.scaled(k)).iv == pytest.approx(impact_vitality(w).iv, abs=1e-9)


@settings(max_examples=200)
@given(windows(max_n=20, max_count=50), st.data())
def test_recency_monotonicity(w, data):
    donors = [k for k, c in enumerate(w.counts) if c > 0 and k > 0]
    assume(donors)
    k = data.draw(st.sampled_from(donors))
    j = data.draw(st.integers(0, k - 1))
    counts = list(w.counts)
    counts[k] -= 1
    counts[j] += 1
    assert impact_vitality_exact(counts) > impact_vitality_exact(w)


@given(st.lists(st.integers(0, 10_000), min_size=2, max_size=40, unique=True))
def test_sign_convention(values):
    rising = sorted(values, reverse=True)  # recent first, so rising toward the present
    assume(sum(rising) > 0)
    assert impact_vitality_exact(rising) > 1
    assert impact_vitality(CountsWindow(2006, tuple(rising))).iv > 1
    falling = sorted(values)
    assert impact_vitality_exact(falling) < 1
    assert impact_vitality(CountsWindow(2006, tuple(falling))).iv < 1
