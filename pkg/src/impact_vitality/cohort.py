"""IV time series, vitality classification and cohort cross-tabulation."""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Union

from .core import CountsWindow, IvResult, impact_vitality
from .ingest import CitationTimeline, Cohort, ResearcherProfile, Selection, window_from_timeline

DEFAULT_MOVING_LENGTH = 5
DEFAULT_THRESHOLD = 1.0
DEFAULT_EPSILON = 1e-9


@dataclass(frozen=True)
class Moving:
    """Fixed-length window slid forward one year at a time."""

    length: int = DEFAULT_MOVING_LENGTH

    def __post_init__(self):
        if self.length < 2:
            raise ValueError(f"moving window length must be at least 2, got {self.length}")

    def length_at(self, year: int) -> int:
        return self.length

    def first_valid_year(self) -> int | None:
        return None


@dataclass(frozen=True)
class Anchored:
    """Growing window whose oldest year is always ``start_year`` (e.g. the PhD year)."""

    start_year: int

    def length_at(self, year: int) -> int:
        return year - self.start_year + 1

    def first_valid_year(self) -> int:
        return self.start_year + 1


WindowSpec = Union[Moving, Anchored]


@dataclass(frozen=True)
class IvSeries:
    researcher_id: str
    spec: WindowSpec
    entries: tuple[tuple[int, IvResult], ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def years(self) -> list[int]:
        return [y for y, _ in self.entries]

    @property
    def values(self) -> list[float | None]:
        return [r.iv if r.defined else None for _, r in self.entries]


class Vitality(enum.Enum):
    ALL_AT_OR_ABOVE = "AllAtOrAboveOne"
    BELOW_SOME_YEAR = "BelowOneSomeYear"
    NO_DEFINED_YEARS = "NoDefinedYears"


@dataclass(frozen=True)
class VitalityClass:
    vitality: Vitality
    had_undefined_years: bool = False


@dataclass(frozen=True)
class ContingencyTable:
    """Selection outcome crossed with vitality classification.

    Researchers with an unknown selection label, or with no evaluable
    year, are counted in the exclusion tallies instead of the cells.
    """

    selected_all: int = 0
    selected_below: int = 0
    not_selected_all: int = 0
    not_selected_below: int = 0
    excluded_unknown_label: int = 0
    excluded_no_defined_years: int = 0

    @property
    def cells(self) -> tuple[int, int, int, int]:
        return (
            self.selected_all,
            self.selected_below,
            self.not_selected_all,
            self.not_selected_below,
        )

    @property
    def classified(self) -> int:
        return sum(self.cells)

    @property
    def total(self) -> int:
        return self.classified + self.excluded_unknown_label + self.excluded_no_defined_years


def iv_series(t: CitationTimeline, spec: WindowSpec, y_from: int, y_to: int) -> IvSeries:
    """IV for every year in ``[y_from, y_to]`` under ``spec``.

    Years whose window holds no citing publications stay in the series as
    :class:`Undefined`.
    """
    if y_from > y_to:
        raise ValueError(f"y_from {y_from} is after y_to {y_to}")
    first = spec.first_valid_year()
    if first is not None and y_from < first:
        raise ValueError(
            f"anchored window starting {spec.start_year} needs at least two years; "
            f"first valid year is {first}, got {y_from}"
        )
    entries = tuple(
        (y, impact_vitality(window_from_timeline(t, y, spec.length_at(y))))
        for y in range(y_from, y_to + 1)
    )
    return IvSeries(t.researcher_id, spec, entries)


def classify(
    series: IvSeries,
    threshold: float = DEFAULT_THRESHOLD,
    epsilon: float = DEFAULT_EPSILON,
) -> VitalityClass:
    if len(series) == 0:
        raise ValueError(f"empty IV series for {series.researcher_id!r}")
    results = [r for _, r in series]
    defined = [r.iv for r in results if r.defined]
    had_undefined = len(defined) < len(results)
    if not defined:
        return VitalityClass(Vitality.NO_DEFINED_YEARS, True)
    if had_undefined or any(iv < threshold - epsilon for iv in defined):
        return VitalityClass(Vitality.BELOW_SOME_YEAR, had_undefined)
    return VitalityClass(Vitality.ALL_AT_OR_ABOVE, False)


def researcher_plan(
    profile: ResearcherProfile,
    spec: WindowSpec | None,
    y_to: int,
    y_from: int | None = None,
) -> tuple[WindowSpec, int, int] | None:
    """Window regime and year range for one researcher.

    ``spec=None`` anchors the window at the researcher's PhD year.  When
    ``y_from`` is omitted the range starts the year after the PhD.
    Returns ``None`` when no year is left to evaluate.
    """
    if spec is None:
        spec = Anchored(profile.phd_year)
    start = profile.phd_year + 1 if y_from is None else y_from
    if start > y_to:
        return None
    return spec, start, y_to


def cohort_series(
    cohort: Cohort,
    spec: WindowSpec | None,
    y_to: int,
    y_from: int | None = None,
    jobs: int = 1,
) -> dict[str, IvSeries | None]:
    """IV series for every researcher, keyed (and ordered) by researcher id."""

    def one(pair):
        profile, timeline = pair
        plan = researcher_plan(profile, spec, y_to, y_from)
        if plan is None:
            return profile.researcher_id, None
        return profile.researcher_id, iv_series(timeline, plan[0], plan[1], plan[2])

    pairs = list(cohort)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, pairs))
    else:
        results = [one(p) for p in pairs]
    return dict(results)


def contingency_table(
    cohort: Cohort,
    spec: WindowSpec | None = None,
    y_to: int | None = None,
    threshold: float = DEFAULT_THRESHOLD,
    epsilon: float = DEFAULT_EPSILON,
    y_from: int | None = None,
    jobs: int = 1,
) -> ContingencyTable:
    """Cross-tabulate selection outcome against vitality classification.

    ``spec=None`` gives IV_PhD: each researcher's window is anchored at
    their own PhD year.
    """
    if y_to is None:
        raise TypeError("y_to is required")
    if len(cohort) == 0:
        raise ValueError("empty cohort")
    series = cohort_series(cohort, spec, y_to, y_from, jobs)
    tally = dict.fromkeys(
        ["selected_all", "selected_below", "not_selected_all", "not_selected_below",
         "excluded_unknown_label", "excluded_no_defined_years"],
        0,
    )
    for profile, _ in cohort:
        if profile.selected is Selection.UNKNOWN:
            tally["excluded_unknown_label"] += 1
            continue
        s = series[profile.researcher_id]
        if s is None:
            tally["excluded_no_defined_years"] += 1
            continue
        vitality = classify(s, threshold, epsilon).vitality
        if vitality is Vitality.NO_DEFINED_YEARS:
            tally["excluded_no_defined_years"] += 1
            continue
        row = "selected" if profile.selected is Selection.SELECTED else "not_selected"
        col = "all" if vitality is Vitality.ALL_AT_OR_ABOVE else "below"
        tally[f"{row}_{col}"] += 1
    return ContingencyTable(**tally)


@dataclass(frozen=True)
class PerturbationRow:
    year: int
    iv_before: IvResult
    iv_after: IvResult

    @property
    def difference(self) -> float | None:
        if self.iv_before.defined and self.iv_after.defined:
            return self.iv_after.iv - self.iv_before.iv
        return None


def perturbation_report(
    t: CitationTimeline, spec: WindowSpec, y1: int, delta: int = 1
) -> list[PerturbationRow]:
    """Effect on IV at ``y1`` of adding ``delta`` citing publications to each
    single year of the window in turn.  Rows run oldest year first."""
    window = window_from_timeline(t, y1, spec.length_at(y1))
    before = impact_vitality(window)
    rows = []
    for idx in reversed(range(window.n)):
        counts = list(window.counts)
        counts[idx] += delta
        after = impact_vitality(CountsWindow(window.y1, tuple(counts)))
        rows.append(PerturbationRow(window.y1 - idx, before, after))
    return rows


def max_abs_perturbation(rows: list[PerturbationRow]) -> float:
    return max(abs(r.difference) for r in rows if r.difference is not None)

