"""Poset construction, neighborhoods, intervals, and serialization."""

from __future__ import annotations

import pytest

from braidboard.delta import cell_poset, simplicial_delta
from braidboard.errors import DomainError
from braidboard.poset import Poset, open_interval, poset_neighborhood


def edge_poset() -> Poset:
    # face poset of a single edge a|b
    return cell_poset(simplicial_delta([("a", "b")]))


def triangle_poset() -> Poset:
    return cell_poset(simplicial_delta([("a", "b", "c")]))


def test_unknown_cover_rejected():
    with pytest.raises(DomainError):
        Poset({"a": ["ghost"]})


def test_cycle_rejected():
    with pytest.raises(DomainError):
        Poset({"a": ["b"], "b": ["a"]})


def test_empty_poset():
    P = Poset({})
    assert P.elements == ()
    assert P.dim == -1


def test_heights_and_dim():
    P = Poset({"a": [], "b": ["a"], "c": ["b"], "x": []})
    assert P.height("a") == 0
    assert P.height("c") == 2
    assert P.height("x") == 0
    assert P.dim == 2


def test_neighborhoods_on_edge():
    P = edge_poset()
    assert poset_neighborhood(P, "a|b", "closure").elements == ("a", "a|b", "b")
    assert poset_neighborhood(P, "a", "link").elements == ("a|b",)
    assert poset_neighborhood(P, "a", "boundary").elements == ()
    assert poset_neighborhood(P, "a", "star").elements == ("a", "a|b")
    with pytest.raises(DomainError):
        poset_neighborhood(P, "zz", "closure")
    with pytest.raises(DomainError):
        poset_neighborhood(P, "a", "corona")


def test_neighborhood_identities():
    for P in (edge_poset(), triangle_poset()):
        for p in P.elements:
            closure = set(poset_neighborhood(P, p, "closure").elements)
            boundary = set(poset_neighborhood(P, p, "boundary").elements)
            star = set(poset_neighborhood(P, p, "star").elements)
            link = set(poset_neighborhood(P, p, "link").elements)
            assert closure - boundary == {p}
            assert star - link == {p}
            assert star & closure == {p}


def test_open_interval_triangle():
    P = triangle_poset()
    between = open_interval(P, "a", "a|b|c")
    assert between.elements == ("a|b", "a|c")
    assert open_interval(P, "a", "a").elements == ()
    assert open_interval(P, "a", "b").elements == ()


def test_induced_recomputes_covers():
    P = Poset({"a": [], "b": ["a"], "c": ["b"]})
    Q = P.induced(["a", "c"])
    assert Q.lower_covers("c") == ("a",)
    assert Q.height("c") == 1


def test_leq_and_extremes():
    P = triangle_poset()
    assert P.leq("a", "a|b|c")
    assert not P.leq("a|b|c", "a")
    assert set(P.minimal_elements()) == {"a", "b", "c"}
    assert P.maximal_elements() == ("a|b|c",)


def test_chains_count_on_edge():
    P = edge_poset()
    chains = P.chains()
    # 3 singletons, 2 two-element chains through the edge, 0 longer
    assert sorted(len(c) for c in chains) == [1, 1, 1, 2, 2]


def test_json_round_trip():
    P = triangle_poset()
    text = P.to_json()
    assert Poset.from_json(text).to_json() == text
    assert Poset.from_json(Poset({}).to_json()).elements == ()
