"""Exact census of differences of integer linear recurrence sequences."""

from recdiff._core import (
    RecdiffError,
    SequencePairAnalysis,
    __version__,
    characteristic_polynomial,
    dominant_root,
    find_monotone_start,
    find_roots,
    height,
    matveev_lower_bound,
    multiplicative_independence,
    real_power_census,
    run_config_text,
    term,
    term_by_matrix_power,
    term_range,
)

__all__ = [
    "RecdiffError",
    "SequencePairAnalysis",
    "__version__",
    "characteristic_polynomial",
    "dominant_root",
    "find_monotone_start",
    "find_roots",
    "height",
    "matveev_lower_bound",
    "multiplicative_independence",
    "real_power_census",
    "run_config_text",
    "term",
    "term_by_matrix_power",
    "term_range",
]
