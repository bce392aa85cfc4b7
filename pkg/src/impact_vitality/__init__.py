"""Impact Vitality: a harmonic-weighted citation trend indicator."""

from importlib import resources

from .cohort import (
    Anchored,
    ContingencyTable,
    IvSeries,
    Moving,
    PerturbationRow,
    Vitality,
    VitalityClass,
    classify,
    cohort_series,
    contingency_table,
    iv_series,
    max_abs_perturbation,
    perturbation_report,
)
from .core import (
    CountsWindow,
    IvValue,
    Undefined,
    UndefinedReason,
    WindowTooShortError,
    harmonic_sum,
    impact_vitality,
    impact_vitality_exact,
    iv_upper_bound,
    iv_upper_bound_exact,
)
from .ingest import (
    CitationTimeline,
    Cohort,
    ParseError,
    ResearcherProfile,
    Selection,
    build_cohort,
    format_counts,
    parse_counts_file,
    parse_profiles_file,
    window_from_timeline,
)

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path to a bundled data file: ``"counts"`` or ``"profiles"``.

    The bundled cohort is synthetic: 13 researchers whose IV_PhD
    classification through 2006 crosses with their selection label as
    5 / 0 / 4 / 4.
    """
    return resources.files(__name__).joinpath("data", f"fixture_{name}.csv")


def load_fixture_cohort() -> Cohort:
    with fixture_path("counts").open("rb") as fh:
        timelines, _ = parse_counts_file(fh)
    with fixture_path("profiles").open("rb") as fh:
        profiles = parse_profiles_file(fh)
    cohort, _ = build_cohort(profiles, timelines)
    return cohort


FIXTURE_YEAR_TO = 2006
