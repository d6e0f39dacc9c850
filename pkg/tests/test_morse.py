"""Height functions, descending links, and the sublevel-inclusion criterion."""

from __future__ import annotations

import pytest

from braidboard.delta import simplicial_delta
from braidboard.errors import DomainError, InvalidHeightError
from braidboard.graphs import chessboard_complex, chessboard_vertex
from braidboard.morse import (
    HeightFunction,
    bb_verify,
    descending_link,
    sublevel_complex,
)


def column_heights(m: int, n: int) -> HeightFunction:
    """Height of a square (i, j) is its column j; injective on matchings."""
    return HeightFunction.build(
        {chessboard_vertex(i, j): j for i in range(1, m + 1) for j in range(1, n + 1)}
    )


def test_height_lookup_and_json():
    h = HeightFunction.build({"b": 2, "a": 1})
    assert h.of("a") == 1 and h.as_dict() == {"a": 1, "b": 2}
    assert HeightFunction.from_json(h.to_json()) == h
    with pytest.raises(DomainError):
        HeightFunction.from_json("[1, 2]")
    with pytest.raises(DomainError):
        h.of("missing")
    with pytest.raises(DomainError):
        HeightFunction(values=(("a", 1), ("a", 2)))


def test_validation_against_a_complex():
    X = simplicial_delta([("a", "b")])
    with pytest.raises(InvalidHeightError, match="has no height"):
        HeightFunction.build({"a": 0}).validate_for(X)
    with pytest.raises(InvalidHeightError, match="equal height"):
        HeightFunction.build({"a": 0, "b": 0}).validate_for(X)
    HeightFunction.build({"a": 0, "b": 1}).validate_for(X)


def test_descending_link_in_a_triangle():
    X = simplicial_delta([("a", "b", "c")])
    h = HeightFunction.build({"a": 0, "b": 1, "c": 2})
    top = descending_link(X, h, "c")
    # one edge pair from the triangle and two vertex pairs from the edges
    assert top.f_vector() == (2, 1)
    assert sorted(top.cell_ids) == ["a|b|c@2", "a|c@1", "b|c@1"]
    assert top.faces_of("a|b|c@2") == ("b|c@1", "a|c@1")
    assert descending_link(X, h, "a").is_empty()
    mid = descending_link(X, h, "b")
    assert mid.f_vector() == (1,)


def test_descending_link_on_a_rook_board():
    X = chessboard_complex(2, 3)
    h = column_heights(2, 3)
    link = descending_link(X, h, chessboard_vertex(1, 3))
    # edges {(1,3),(2,1)} and {(1,3),(2,2)} descend to two isolated points
    assert link.f_vector() == (2,)
    assert descending_link(X, h, chessboard_vertex(2, 1)).is_empty()


def test_descending_link_rejects_non_vertices():
    X = simplicial_delta([("a", "b")])
    h = HeightFunction.build({"a": 0, "b": 1})
    with pytest.raises(DomainError):
        descending_link(X, h, "a|b")


def test_sublevel_complexes_grow_with_the_threshold():
    X = chessboard_complex(2, 3)
    h = column_heights(2, 3)
    assert sublevel_complex(X, h, 0).is_empty()
    assert sublevel_complex(X, h, 1).f_vector() == (2,)
    assert sublevel_complex(X, h, 2).f_vector() == (4, 2)
    assert sublevel_complex(X, h, 3).f_vector() == X.f_vector() == (6, 6)


def test_bb_verify_pass_with_exact_map_facts():
    X = chessboard_complex(2, 3)
    rep = bb_verify(X, column_heights(2, 3), t=2, d=-1)
    assert rep.passed and rep.hypothesis_met
    facts = {i: f for i, _, f in rep.maps}
    assert facts[-1].iso
    # the sublevel board is disconnected while the full board is connected:
    # the degree-0 map is onto but not injective, exactly what "epi" demands
    assert facts[0].epi and not facts[0].mono
    expected = {i: e for i, e, _ in rep.maps}
    assert expected == {-1: "iso", 0: "epi"}


def test_bb_verify_inconclusive_when_a_link_is_disconnected():
    X = chessboard_complex(2, 3)
    rep = bb_verify(X, column_heights(2, 3), t=2, d=0)
    assert rep.verdict == "inconclusive" and not rep.hypothesis_met
    assert rep.witness_vertex == chessboard_vertex(1, 3)
    assert rep.witness_link.reduced_betti(0) == 1
    assert "no prediction" in rep.notes[0]
    assert rep.to_json_dict()["witness"]["vertex"] == "1,3"


def test_bb_verify_vacuous_threshold_gives_isos():
    X = chessboard_complex(2, 3)
    rep = bb_verify(X, column_heights(2, 3), t=3, d=0)
    assert rep.passed
    assert all(f.iso for _, _, f in rep.maps)


def test_bb_verify_validates_the_degree():
    X = simplicial_delta([("a",)])
    with pytest.raises(DomainError):
        bb_verify(X, HeightFunction.build({"a": 0}), t=0, d=-2)
