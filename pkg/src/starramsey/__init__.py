"""Star Ramsey, star-critical, regular Ramsey and minimum-degree thresholds for stars,
with explicit extremal colorings and exhaustive-search oracles."""

from .arrow import (
    SearchBudget,
    arrows_decision,
    find_mono_star,
    min_degree_search,
    ramsey_search,
    regular_ramsey_search,
    star_critical_search,
)
from .construct import audit_witness, regular_nonarrowing_witness, star_critical_witness
from .factorize import (
    hamiltonian_decomposition,
    max_star_free_graph,
    one_factorization,
    path_two_matchings,
    regular_graph,
    star_free_edge_bound,
)
from .formulas import (
    all_reports,
    min_degree_threshold_f,
    ramsey_stars,
    regular_ramsey_stars,
    regular_threshold_g,
    star_critical_stars,
    threshold_chain,
)
from .types import Arrows, Decomposition, EdgeColoring, Graph, NotArrows, StarParams, color_class, degree

__version__ = "0.1.0"
