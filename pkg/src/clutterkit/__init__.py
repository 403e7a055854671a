"""Chordal clutters: elimination, vertex decomposability, linear resolutions and quotients."""

from .ascent import (
    ascent,
    cycle_space,
    decompose_into_face_minimal_cycles,
    chordal_edge_order,
    find_edge_order,
    is_cf_chordal,
    is_cf_tree,
    is_d_chorded,
    is_d_cycle,
    iterated_ascents,
)
from .chordality import (
    EliminationCertificate,
    SheddingCertificate,
    closed_neighborhood,
    contraction,
    delete_subcircuit,
    dual_complex,
    eliminate_toward_vertex_deletion,
    free_maximal_subcircuits,
    is_chordal,
    is_shedding_vertex,
    is_simplicial_vertex,
    is_vertex_decomposable,
    is_w_chordal,
    link_clutter,
    maximal_subcircuits,
    replay_elimination,
    shedding_pure_criterion,
    simplicial_maximal_subcircuits,
)
from .core import (
    BudgetExhausted,
    Clutter,
    GeneralClutter,
    PreconditionError,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    complement,
    delete_vertex,
    dual_clutter,
    face,
    faces,
    fmt,
    generated,
    labels,
    link,
    remove_circuit,
    stanley_reisner_generators,
)
from .formats import FormatError, dumps, load, loads, save
from .homlin import (
    BettiTable,
    Field,
    clique_homology,
    clutter_betti,
    graded_betti,
    has_linear_resolution,
    reduced_homology,
)
from .quotients import (
    append_sms_generator,
    ascent_order,
    betti_from_order,
    has_linear_quotients,
    is_admissible_order,
    restrict_order_by_vertex,
)

__version__ = "0.1.0"
