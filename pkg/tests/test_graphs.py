"""Graph families, their complexes, and chessboard constructions."""

from __future__ import annotations

import pytest

from braidboard.errors import DomainError, FamilyNotClosedError
from braidboard.graphs import (
    MultiGraph,
    builtin_family,
    chessboard_cell_id,
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
from braidboard.homology import reduced_homology


def triangle() -> MultiGraph:
    return complete_graph(3)


def test_multigraph_construction():
    G = MultiGraph.build(["a", "b"], [("a", "b", "e1"), ("a", "b", "e2"), ("a", "a", "l")])
    assert G.edge_ids() == ("e1", "e2", "l")
    assert G.endpoints("e1") == ("a", "b")
    assert not G.is_simple()
    assert MultiGraph.build(["a", "b"], [("a", "b", "e")]).is_simple()


def test_multigraph_rejects_bad_labels():
    with pytest.raises(DomainError):
        MultiGraph.build(["a|b"], [])
    with pytest.raises(DomainError):
        MultiGraph.build(["a"], [("a", "a", "x<y")])
    with pytest.raises(DomainError):
        MultiGraph.build(["a"], [("a", "b", "e")])


def test_component_count():
    G = MultiGraph.build(["a", "b", "c"], [("a", "b", "e1"), ("b", "c", "e2")])
    assert G.component_count() == 1
    assert G.component_count(["e1"]) == 2
    assert G.component_count([]) == 3


def test_multigraph_json_round_trip():
    G = MultiGraph.build(["a", "b"], [("a", "b", "e1"), ("b", "b", "l")])
    assert MultiGraph.from_json(G.to_json()) == G


def test_matchings_family_values():
    F = matchings_family(complete_bipartite(2, 2))
    assert F(["1,1"]) and F(["1,1", "2,2"])
    assert not F(["1,1", "1,2"])
    members = family_members(F)
    assert len(members) == 4 + 2  # four single squares, two perfect matchings


def test_loops_are_never_matchings_or_forests():
    G = MultiGraph.build(["a"], [("a", "a", "l")])
    assert not matchings_family(G)(["l"])
    assert not forests_family(G)(["l"])


def test_forest_family_triangle():
    X = graph_complex(forests_family(triangle()))
    assert X.f_vector() == (3, 3)  # all edges, all pairs, no filled triangle
    rep = reduced_homology(X)
    assert rep.reduced_betti(1) == 1


def test_parallel_edges_form_a_cycle():
    G = MultiGraph.build(["a", "b"], [("a", "b", "e1"), ("a", "b", "e2")])
    F = forests_family(G)
    assert F(["e1"]) and F(["e2"]) and not F(["e1", "e2"])


def test_subgraphs_family_is_full_simplex():
    X = graph_complex(subgraphs_family(triangle()))
    assert X.f_vector() == (3, 3, 1)


def test_is_2_connected():
    assert is_2_connected(triangle())
    assert is_2_connected(complete_graph(4))
    path = MultiGraph.build(["a", "b", "c"], [("a", "b", "e1"), ("b", "c", "e2")])
    assert not is_2_connected(path)
    with pytest.raises(DomainError):
        is_2_connected(MultiGraph.build(["a", "b"], [("a", "b", "e1"), ("a", "b", "e2")]))


def test_not2connected_complex_on_k4():
    X = graph_complex(not2connected_family(complete_graph(4)))
    assert X.f_vector() == (6, 15, 20, 12)
    rep = reduced_homology(X)
    assert rep.reduced_betti(3) == 2
    assert all(rep.reduced_betti(i) == 0 for i in range(-1, 3))
    assert all(not rep.torsion_at(i) for i in range(-1, 4))


def test_custom_family_closure_check():
    with pytest.raises(FamilyNotClosedError):
        custom_family(triangle(), lambda s: len(s) == 2, samples=200, seed=5)
    F = custom_family(triangle(), lambda s: len(s) <= 1)
    assert len(family_members(F)) == 3


def test_family_members_rejects_non_closed_membership():
    F = builtin_family(triangle(), "subgraphs")
    broken = type(F)(F.ground, "custom", lambda s: s != frozenset({"1-3"}))
    with pytest.raises(FamilyNotClosedError):
        family_members(broken)


def test_family_link():
    F = matchings_family(complete_bipartite(2, 2))
    L = family_link(F, ["1,1"])
    assert L(["2,2"]) and not L(["1,2"]) and not L(["1,1"])
    assert graph_complex(L).f_vector() == (1,)
    with pytest.raises(DomainError):
        family_link(F, ["1,1", "1,2"])


def test_contract_edge_of_triangle():
    G = contract(triangle(), ["1-2"])
    assert len(G.vertices) == 2
    assert len(G.edge_ids()) == 2  # the two remaining edges become parallel
    assert not G.is_simple()


def test_contract_rejects_cycles():
    with pytest.raises(DomainError):
        contract(triangle(), ["1-2", "1-3", "2-3"])


def test_delete_edge_detects_separation():
    path = MultiGraph.build(["a", "b", "c"], [("a", "b", "e1"), ("b", "c", "e2")])
    smaller, separating = delete_edge(path, "e1")
    assert separating and "e1" not in smaller.edge_ids()
    _, separating = delete_edge(triangle(), "1-2")
    assert not separating


def test_chessboard_f_vectors():
    assert chessboard_complex(2, 2).f_vector() == (4, 2)
    assert chessboard_complex(2, 3).f_vector() == (6, 6)
    assert chessboard_complex(3, 3).f_vector() == (9, 18, 6)


def test_chessboard_2_3_is_a_circle():
    rep = reduced_homology(chessboard_complex(2, 3))
    assert rep.reduced_betti(0) == 0 and rep.reduced_betti(1) == 1
    assert not rep.torsion_at(1)


def test_chessboard_matches_bipartite_matching_complex():
    for m, n in ((2, 2), (2, 4), (3, 3), (3, 4)):
        A = chessboard_complex(m, n)
        B = graph_complex(matchings_family(complete_bipartite(m, n)))
        assert sorted(A.cell_ids) == sorted(B.cell_ids)
        assert all(A.faces_of(c) == B.faces_of(c) for c in A.cell_ids)


def test_chessboard_cell_id_sorting():
    assert chessboard_cell_id([(2, 1), (1, 3)]) == "1,3|2,1"


def test_connectivity_bound_values():
    assert connectivity_bound(4, 5) == (3, False)
    assert connectivity_bound(2, 4) == (2, True)
    assert connectivity_bound(3, 5) == (3, True)
    assert connectivity_bound(5, 5) == (3, False)
    assert connectivity_bound(1, 1) == (1, True)


def test_builtin_family_names():
    for name in ("matchings", "forests", "subgraphs", "not2connected"):
        assert builtin_family(complete_graph(4), name).name == name
    with pytest.raises(DomainError):
        builtin_family(triangle(), "widgets")
