"""Monochromatic triangle tilings: constructions, exact solvers, verifiers."""

from tritile.constructions import (
    BLUE,
    RED,
    BoundReport,
    badly_coloured_k5,
    bound_report,
    ex_bes_1,
    ex_bes_2,
    ex_bes_3,
    ex_triangle,
    ex_triangle_alt,
    extremal_min_formula,
    pinned_apex_colouring,
    pinned_apex_sizes,
    random_min_degree_colouring,
    special_blowup,
    trivial_degree_threshold,
)
from tritile.graphs import (
    AnomalyError,
    Bowtie,
    ColouredGraph,
    MonoClique,
    SearchBudgetExceeded,
    Tiling,
    blow_up,
    complete_colouring,
    colouring_code,
    read_graph,
    read_graph_json,
    write_graph,
    write_graph_json,
)
from tritile.proofs import (
    RAMSEY_NUMBERS,
    SPECIAL_RAMSEY_NUMBERS,
    PhasedResult,
    bes_large,
    bes_small,
    bowtie_through_vertex_k6,
    claim_pair_k7,
    extract_mono_triangle_k6,
    extract_three_disjoint_k7x2,
    extract_two_disjoint_k8,
    extract_two_disjoint_same_colour_k10,
    generalized_moon_small,
    moon_large,
    moon_small,
    phased_tiler,
    second_bowtie_k7,
)
from tritile.solvers import (
    SolveResult,
    clique_tiling_interpolated,
    find_bowtie,
    find_perfect_clique_tiling,
    max_mixed_tiling,
    max_single_colour_tiling,
)
from tritile.verifiers import (
    AUDIT_INSTANCES,
    K7X2_EDGES,
    K7X2_N,
    AuditRow,
    LemmaReport,
    ProbeRecord,
    RamseyResult,
    audit_tightness,
    compute_ramsey,
    compute_special_ramsey,
    enumerate_colourings,
    has_mono_pair_sharing_at_most,
    k7x2_bits,
    k7x2_code,
    k7x2_graph,
    k7x2_packing_floor,
    max_disjoint_mono_capped,
    mono_triangle_count,
    probe_question,
    verify_bowtie_lemmas,
    verify_claim_k7,
    verify_fact_k6,
    verify_k7_blowup,
    verify_lemma_k8,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_INSTANCES",
    "AnomalyError",
    "AuditRow",
    "BLUE",
    "BoundReport",
    "Bowtie",
    "ColouredGraph",
    "K7X2_EDGES",
    "K7X2_N",
    "LemmaReport",
    "MonoClique",
    "PhasedResult",
    "ProbeRecord",
    "RAMSEY_NUMBERS",
    "RED",
    "RamseyResult",
    "SPECIAL_RAMSEY_NUMBERS",
    "SearchBudgetExceeded",
    "SolveResult",
    "Tiling",
    "audit_tightness",
    "badly_coloured_k5",
    "bes_large",
    "bes_small",
    "blow_up",
    "bound_report",
    "bowtie_through_vertex_k6",
    "claim_pair_k7",
    "clique_tiling_interpolated",
    "colouring_code",
    "complete_colouring",
    "compute_ramsey",
    "compute_special_ramsey",
    "enumerate_colourings",
    "ex_bes_1",
    "ex_bes_2",
    "ex_bes_3",
    "ex_triangle",
    "ex_triangle_alt",
    "extract_mono_triangle_k6",
    "extract_three_disjoint_k7x2",
    "extract_two_disjoint_k8",
    "extract_two_disjoint_same_colour_k10",
    "extremal_min_formula",
    "find_bowtie",
    "find_perfect_clique_tiling",
    "generalized_moon_small",
    "has_mono_pair_sharing_at_most",
    "k7x2_bits",
    "k7x2_code",
    "k7x2_graph",
    "k7x2_packing_floor",
    "max_disjoint_mono_capped",
    "max_mixed_tiling",
    "max_single_colour_tiling",
    "mono_triangle_count",
    "moon_large",
    "moon_small",
    "phased_tiler",
    "pinned_apex_colouring",
    "pinned_apex_sizes",
    "probe_question",
    "random_min_degree_colouring",
    "read_graph",
    "read_graph_json",
    "second_bowtie_k7",
    "special_blowup",
    "trivial_degree_threshold",
    "verify_bowtie_lemmas",
    "verify_claim_k7",
    "verify_fact_k6",
    "verify_k7_blowup",
    "verify_lemma_k8",
    "write_graph",
    "write_graph_json",
    "__version__",
]
