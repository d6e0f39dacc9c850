"""Chessboard, matching, and braided chessboard complexes with exact homology.

The package builds strict Delta-complexes from subgraph-closed graph
families (matchings, forests, and friends), computes reduced integer
homology through Smith normal form, verifies homological Cohen-Macaulayness
of complexes and posets, and models partial braids over a board: their face
complexes, projections to the chessboard complex, truncated fibers, and
height-function sublevel comparisons.
"""

from .braid import (
    BraidWord,
    GarsideNormalForm,
    braid_eq,
    braid_inv,
    braid_mul,
    enumerate_braids,
    induced_permutation,
    nf_to_word,
    normal_form,
    strand_delete,
)
from .braided import (
    EMPTY_CONTEXT,
    FrozenContext,
    PartialBraid,
    TruncationResult,
    closure_complex,
    straight_lift,
    truncated_braided_complex,
    truncated_fiber,
)
from .cm import CMReport, QuillenReport, Witness, cm_check, poset_cm_check, quillen_fiber_check
from .delta import DeltaComplex, cell_poset, order_complex, simplicial_delta
from .errors import (
    BudgetExceededError,
    DomainError,
    FamilyNotClosedError,
    InvalidHeightError,
)
from .graphs import (
    ConnectivityBound,
    GraphFamily,
    MultiGraph,
    builtin_family,
    chessboard_complex,
    complete_bipartite,
    complete_graph,
    connectivity_bound,
    contract,
    custom_family,
    delete_edge,
    family_link,
    family_members,
    forests_family,
    graph_complex,
    is_2_connected,
    matchings_family,
    not2connected_family,
    subgraphs_family,
)
from .homology import (
    DegreeMapFacts,
    HomologyReport,
    boundary_matrices,
    induced_inclusion_maps,
    is_homology_spherical,
    reduced_homology,
)
from .morse import (
    HeightFunction,
    MorseReport,
    bb_verify,
    descending_link,
    sublevel_complex,
)
from .pi1 import fundamental_group_trivial
from .poset import Poset, open_interval, poset_neighborhood
from .snf import IntegerMatrix, SmithSolver, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BudgetExceededError",
    "CMReport",
    "ConnectivityBound",
    "DegreeMapFacts",
    "DeltaComplex",
    "DomainError",
    "EMPTY_CONTEXT",
    "FamilyNotClosedError",
    "FrozenContext",
    "GarsideNormalForm",
    "GraphFamily",
    "HeightFunction",
    "HomologyReport",
    "IntegerMatrix",
    "InvalidHeightError",
    "MorseReport",
    "MultiGraph",
    "PartialBraid",
    "Poset",
    "QuillenReport",
    "SmithSolver",
    "TruncationResult",
    "Witness",
    "bb_verify",
    "boundary_matrices",
    "braid_eq",
    "braid_inv",
    "braid_mul",
    "builtin_family",
    "cell_poset",
    "chessboard_complex",
    "closure_complex",
    "cm_check",
    "complete_bipartite",
    "complete_graph",
    "connectivity_bound",
    "contract",
    "custom_family",
    "delete_edge",
    "descending_link",
    "enumerate_braids",
    "family_link",
    "family_members",
    "forests_family",
    "fundamental_group_trivial",
    "graph_complex",
    "induced_inclusion_maps",
    "induced_permutation",
    "is_2_connected",
    "is_homology_spherical",
    "matchings_family",
    "nf_to_word",
    "normal_form",
    "not2connected_family",
    "open_interval",
    "order_complex",
    "poset_cm_check",
    "poset_neighborhood",
    "quillen_fiber_check",
    "reduced_homology",
    "simplicial_delta",
    "smith_normal_form",
    "straight_lift",
    "strand_delete",
    "sublevel_complex",
    "truncated_braided_complex",
    "truncated_fiber",
]
