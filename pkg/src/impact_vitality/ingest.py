"""Reading and validating citation timelines and researcher profiles.

Both inputs are small comma-delimited files without quoting::

    researcher_id,year,citing_publications
    researcher_id,phd_year,selected

Any structural problem aborts the parse with a :class:`ParseError` that
carries the 1-based line number.  Non-fatal oddities (zero-count rows,
unmatched identifiers) come back as warning strings.
"""

from __future__ import annotations

import enum
import io
import os
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping, Union

from .core import CountsWindow, WindowTooShortError

COUNTS_HEADER = "researcher_id,year,citing_publications"
PROFILES_HEADER = "researcher_id,phd_year,selected"
MIN_YEAR = 1900
MAX_YEAR = 2100

Source = Union[str, os.PathLike, IO[str], IO[bytes]]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class Selection(enum.Enum):
    SELECTED = "Selected"
    NOT_SELECTED = "NotSelected"
    UNKNOWN = "Unknown"


_SELECTION_TOKENS = {
    "true": Selection.SELECTED,
    "false": Selection.NOT_SELECTED,
    "": Selection.UNKNOWN,
}


@dataclass(frozen=True)
class CitationTimeline:
    researcher_id: str
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    def __hash__(self):
        return hash((self.researcher_id, tuple(self.counts.items())))

    def get(self, year: int) -> int:
        return self.counts.get(year, 0)

    @property
    def first_year(self) -> int | None:
        return min(self.counts) if self.counts else None

    @property
    def last_year(self) -> int | None:
        return max(self.counts) if self.counts else None


@dataclass(frozen=True)
class ResearcherProfile:
    researcher_id: str
    phd_year: int
    selected: Selection = Selection.UNKNOWN


@dataclass(frozen=True)
class Cohort:
    """Profiles joined with timelines on ``researcher_id``."""

    profiles: Mapping[str, ResearcherProfile]
    timelines: Mapping[str, CitationTimeline]

    def __len__(self):
        return len(self.profiles)

    def __iter__(self) -> Iterator[tuple[ResearcherProfile, CitationTimeline]]:
        for rid in sorted(self.profiles):
            yield self.profiles[rid], self.timelines[rid]


def _read_text(source: Source) -> tuple[str, str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            raw = fh.read()
        name = os.fspath(source)
    else:
        raw = source.read()
        name = getattr(source, "name", "<stream>")
        if not isinstance(name, str):
            name = "<stream>"
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8 ({exc})", source=name) from None
    return raw, name


def _rows(text: str, header: str, name: str) -> Iterator[tuple[int, list[str]]]:
    lines = text.split("\n")
    first = lines[0].rstrip("\r").lstrip("\ufeff") if lines else ""
    if first != header:
        raise ParseError(f"expected header {header!r}, got {first!r}", 1, name)
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(f"expected 3 fields, got {len(fields)}", lineno, name)
        if not fields[0]:
            raise ParseError("empty researcher_id", lineno, name)
        yield lineno, fields


def _year(token: str, what: str, lineno: int, name: str) -> int:
    try:
        year = int(token)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {token!r}", lineno, name) from None
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise ParseError(
            f"{what} {year} outside [{MIN_YEAR}, {MAX_YEAR}]", lineno, name
        )
    return year


def parse_counts_file(source: Source) -> tuple[dict[str, CitationTimeline], list[str]]:
    """Parse a counts file into timelines keyed by researcher id.

    Returns
    -------
    timelines : dict[str, CitationTimeline]
    warnings : list[str]
    """
    text, name = _read_text(source)
    counts: dict[str, dict[int, int]] = {}
    warnings = []
    for lineno, (rid, year_tok, count_tok) in _rows(text, COUNTS_HEADER, name):
        year = _year(year_tok, "year", lineno, name)
        try:
            count = int(count_tok)
        except ValueError:
            raise ParseError(
                f"citing_publications is not an integer: {count_tok!r}", lineno, name
            ) from None
        if count < 0:
            raise ParseError(f"negative citing_publications {count}", lineno, name)
        per_year = counts.setdefault(rid, {})
        if year in per_year:
            raise ParseError(f"duplicate row for ({rid}, {year})", lineno, name)
        if count == 0:
            warnings.append(f"{name}:{lineno}: zero-count row for ({rid}, {year})")
        per_year[year] = count
    timelines = {
        rid: CitationTimeline(rid, per_year) for rid, per_year in sorted(counts.items())
    }
    return timelines, warnings


def parse_profiles_file(source: Source) -> dict[str, ResearcherProfile]:
    text, name = _read_text(source)
    profiles: dict[str, ResearcherProfile] = {}
    for lineno, (rid, year_tok, sel_tok) in _rows(text, PROFILES_HEADER, name):
        if rid in profiles:
            raise ParseError(f"duplicate researcher_id {rid!r}", lineno, name)
        phd_year = _year(year_tok, "phd_year", lineno, name)
        try:
            selected = _SELECTION_TOKENS[sel_tok]
        except KeyError:
            raise ParseError(
                f"selected must be 'true', 'false' or empty, got {sel_tok!r}",
                lineno,
                name,
            ) from None
        profiles[rid] = ResearcherProfile(rid, phd_year, selected)
    return dict(sorted(profiles.items()))


def format_counts(timelines: Iterable[CitationTimeline]) -> str:
    """Serialize timelines back to the counts file format."""
    out = io.StringIO()
    out.write(COUNTS_HEADER + "\n")
    for t in sorted(timelines, key=lambda t: t.researcher_id):
        for year, count in t.counts.items():
            out.write(f"{t.researcher_id},{year},{count}\n")
    return out.getvalue()


def build_cohort(
    profiles: Mapping[str, ResearcherProfile],
    timelines: Mapping[str, CitationTimeline],
) -> tuple[Cohort, list[str]]:
    warnings = []
    joined = {}
    for rid in sorted(profiles):
        if rid in timelines:
            joined[rid] = timelines[rid]
        else:
            warnings.append(f"profile {rid!r} has no count rows; using an all-zero timeline")
            joined[rid] = CitationTimeline(rid, {})
    for rid in sorted(set(timelines) - set(profiles)):
        warnings.append(f"timeline {rid!r} has no profile; dropped")
    return Cohort(dict(sorted(profiles.items())), joined), warnings


def window_from_timeline(t: CitationTimeline, y1: int, n: int) -> CountsWindow:
    """Counts for years ``y1, y1-1, ..., y1-n+1``; missing years count 0."""
    if n < 2:
        raise WindowTooShortError(f"window length must be at least 2, got {n}")
    return CountsWindow(y1, tuple(t.get(y1 - i) for i in range(n)))
