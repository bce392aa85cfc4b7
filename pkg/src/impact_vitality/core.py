"""
Impact Vitality indicator
=========================

Harmonic-weighted ratio of recent to older citing publications over a
window of ``n`` calendar years ending at ``y1``::

    IV(y1, n) = [n * sum(c[i] / i) / sum(c[i]) - 1] / [H(n) - 1]

where ``c[1]`` counts citing publications from ``y1`` (most recent) and
``c[n]`` those from ``y1 - n + 1``.  A flat stream scores exactly 1; a
stream rising toward the present scores above 1, a falling one below 1.

The float path is the production path.  :func:`impact_vitality_exact`
evaluates the same quantity in integer/rational arithmetic and exists to
check it.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union


class UndefinedReason(enum.Enum):
    WINDOW_TOO_SHORT = "window too short"
    NO_CITING_PUBLICATIONS = "no citing publications in window"


class WindowTooShortError(ValueError):
    """Raised when a window of fewer than two years is requested."""

    reason = UndefinedReason.WINDOW_TOO_SHORT


@dataclass(frozen=True)
class CountsWindow:
    """Citing-publication counts for ``len(counts)`` years ending at ``y1``.

    ``counts[0]`` belongs to ``y1``, ``counts[-1]`` to the oldest year.
    """

    y1: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if len(counts) < 2:
            raise WindowTooShortError(
                f"window length must be at least 2, got {len(counts)}"
            )
        for c in counts:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"counts must be integers, got {c!r}")
            if c < 0:
                raise ValueError(f"counts must be non-negative, got {c}")
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def years(self) -> tuple[int, ...]:
        """Calendar years of the window, most recent first."""
        return tuple(self.y1 - i for i in range(self.n))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def scaled(self, k: int) -> "CountsWindow":
        return CountsWindow(self.y1, tuple(k * c for c in self.counts))


@dataclass(frozen=True)
class IvValue:
    iv: float
    y1: int
    n: int

    defined = True


@dataclass(frozen=True)
class Undefined:
    reason: UndefinedReason
    y1: int | None = None
    n: int | None = None

    defined = False


IvResult = Union[IvValue, Undefined]


def harmonic_sum(n: int) -> float:
    """Return ``1 + 1/2 + ... + 1/n``, summed in ascending ``i``."""
    if n < 1:
        raise ValueError(f"harmonic_sum requires n >= 1, got {n}")
    total = 0.0
    for i in range(1, n + 1):
        total += 1.0 / i
    return total


def iv_upper_bound(n: int) -> float:
    """Largest attainable IV for a window of length ``n``.

    Reached when every citing publication falls in the most recent year.
    """
    if n < 2:
        raise WindowTooShortError(f"window length must be at least 2, got {n}")
    return (n - 1) / (harmonic_sum(n) - 1.0)


def impact_vitality(window: CountsWindow) -> IvResult:
    """Evaluate IV for ``window`` in double precision.

    Returns :class:`Undefined` when the window holds no citing
    publications at all.
    """
    n = window.n
    total = window.total
    if total == 0:
        return Undefined(UndefinedReason.NO_CITING_PUBLICATIONS, window.y1, n)

    # n/i is exactly 1.0 at i == n, so all-oldest mass gives exactly 0.
    weighted = 0.0
    for i, c in enumerate(window.counts, start=1):
        weighted += c * (n / i)
    iv = (weighted / total - 1.0) / (harmonic_sum(n) - 1.0)
    # rounding can push a hair outside the analytic range
    iv = min(max(iv, 0.0), iv_upper_bound(n))
    return IvValue(iv, window.y1, n)


@functools.lru_cache(maxsize=None)
def _harmonic_integers(n: int) -> tuple[int, tuple[int, ...]]:
    lcm = math.lcm(*range(1, n + 1))
    return lcm, tuple(lcm // i for i in range(1, n + 1))


def impact_vitality_exact(
    window: CountsWindow | Sequence[int],
) -> Fraction | Undefined:
    """Exact rational IV, for use as a test oracle.

    Works over the common denominator ``L = lcm(1..n)`` so the whole
    evaluation stays in integers until the final division.
    """
    if not isinstance(window, CountsWindow):
        window = CountsWindow(0, tuple(window))
    n = window.n
    total = window.total
    if total == 0:
        return Undefined(UndefinedReason.NO_CITING_PUBLICATIONS, window.y1, n)
    lcm, weights = _harmonic_integers(n)
    weighted = sum(c * w for c, w in zip(window.counts, weights))
    harmonic = sum(weights)
    return Fraction(n * weighted - lcm * total, total * (harmonic - lcm))


def iv_upper_bound_exact(n: int) -> Fraction:
    if n < 2:
        raise WindowTooShortError(f"window length must be at least 2, got {n}")
    lcm, weights = _harmonic_integers(n)
    return Fraction((n - 1) * lcm, sum(weights) - lcm)
