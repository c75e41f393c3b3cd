"""turanlab: exact copy counting in graphs and blow-ups, plus verifiers
for extremal constructions against complete-multipartite baselines."""

from .blowup import (
    BlowupPolynomial,
    PartsMaximum,
    WeightedPattern,
    blowup_automorphism_count,
    blowup_copies_polynomial,
    hom_enumerate,
    maximize_over_parts,
)
from .constructions import (
    CounterexampleParams,
    PendantPathSizes,
    choose_terminal_multiplicity,
    constant_condition_holds,
    counterexample_g,
    counterexample_h,
    multipartite_upper_bound,
    pendant_path,
    pendant_path_pattern,
)
from .counting import (
    automorphism_count,
    enumerate_automorphisms,
    exists_copy,
    labeled_copies,
    unlabeled_copies,
)
from .errors import BudgetExceededError, Graph6Error, VertexLimitError
from .experiments import (
    PendantProfile,
    Verdict,
    best_complete_bipartite,
    build_pendant_graph,
    double_star,
    double_star_degree_count,
    double_star_degree_count_raw,
    exhaustive_max_copies,
    find_counterexample_threshold,
    hypothesis_report,
    muirhead_injective_tuple_bound,
    muirhead_symmetrized_bound,
    verify_counterexample,
)
from .graph6 import graph6_parse, graph6_serialize
from .graphs import (
    Graph,
    blowup,
    chromatic_number,
    clique_number,
    complete,
    complete_multipartite,
    cycle,
    diameter,
    is_bipartite,
    is_connected,
    is_triangle_free,
    path,
    petersen,
    power,
    radius,
    turan,
)
from .optimizer import (
    DensityForm,
    density_form,
    maximize_density,
    pattern_catalog_search,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupPolynomial",
    "BudgetExceededError",
    "CounterexampleParams",
    "DensityForm",
    "Graph",
    "Graph6Error",
    "PartsMaximum",
    "PendantPathSizes",
    "PendantProfile",
    "Verdict",
    "VertexLimitError",
    "WeightedPattern",
    "automorphism_count",
    "best_complete_bipartite",
    "blowup",
    "blowup_automorphism_count",
    "blowup_copies_polynomial",
    "build_pendant_graph",
    "choose_terminal_multiplicity",
    "chromatic_number",
    "clique_number",
    "complete",
    "complete_multipartite",
    "constant_condition_holds",
    "counterexample_g",
    "counterexample_h",
    "cycle",
    "density_form",
    "diameter",
    "double_star",
    "double_star_degree_count",
    "double_star_degree_count_raw",
    "enumerate_automorphisms",
    "exhaustive_max_copies",
    "exists_copy",
    "find_counterexample_threshold",
    "graph6_parse",
    "graph6_serialize",
    "hom_enumerate",
    "hypothesis_report",
    "is_bipartite",
    "is_connected",
    "is_triangle_free",
    "labeled_copies",
    "maximize_density",
    "maximize_over_parts",
    "multipartite_upper_bound",
    "muirhead_injective_tuple_bound",
    "muirhead_symmetrized_bound",
    "path",
    "pattern_catalog_search",
    "pendant_path",
    "pendant_path_pattern",
    "petersen",
    "power",
    "radius",
    "turan",
    "unlabeled_copies",
    "verify_counterexample",
]
