"""Independent oracles: exhaustive orbit census and formula/closure/support checks."""

from .census import OrbitCensus, OrbitRecord, closed_form_sizes, enumerate_orbits
from .checks import (
    Formula,
    Report,
    check_census,
    check_closure_order,
    check_dimensions,
    check_formula,
    check_lemma_support,
    check_transporters,
    replay,
    run_all,
)

__all__ = [
    "Formula", "OrbitCensus", "OrbitRecord", "Report", "check_census", "check_closure_order",
    "check_dimensions", "check_formula", "check_lemma_support", "check_transporters",
    "closed_form_sizes", "enumerate_orbits", "replay", "run_all",
]
