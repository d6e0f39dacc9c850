"""Reduced homology, sphericity, and inclusion-induced maps."""

from __future__ import annotations

import pytest

from braidboard.delta import DeltaComplex, simplicial_delta
from braidboard.homology import (
    boundary_matrices,
    induced_inclusion_maps,
    is_homology_spherical,
    reduced_homology,
)
from braidboard.snf import smith_normal_form


def circle() -> DeltaComplex:
    return simplicial_delta([("a", "b"), ("b", "c"), ("a", "c")])


def sphere() -> DeltaComplex:
    verts = ("a", "b", "c", "d")
    return simplicial_delta(
        [verts[:i] + verts[i + 1 :] for i in range(4)]
    )


def projective_plane() -> DeltaComplex:
    tris = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 6), (1, 5, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ]
    return simplicial_delta([tuple(str(v) for v in t) for t in tris])


def test_boundary_of_edge():
    X = simplicial_delta([("a", "b")])
    mats = boundary_matrices(X)
    assert len(mats) == 2
    assert mats[0].entries == ((1, 1),)
    assert tuple(sorted(r[0] for r in mats[1].entries)) == (-1, 1)


def test_triangle_boundary_rank():
    mats = boundary_matrices(circle())
    assert mats[1].rows == 3 and mats[1].cols == 3
    assert smith_normal_form(mats[1]).rank == 2


def test_boundary_squares_to_zero():
    for X in (sphere(), projective_plane(), simplicial_delta([("a", "b", "c", "d")])):
        mats = boundary_matrices(X)
        for low, high in zip(mats, mats[1:]):
            assert low.mul(high).is_zero()


def test_circle_homology():
    rep = reduced_homology(circle())
    assert rep.reduced_betti(1) == 1
    assert rep.reduced_betti(0) == 0
    assert rep.torsion_at(1) == ()
    assert is_homology_spherical(circle(), 1)


def test_sphere_homology():
    rep = reduced_homology(sphere())
    assert rep.reduced_betti(2) == 1
    assert is_homology_spherical(sphere(), 2)
    assert not is_homology_spherical(sphere(), 1)


def test_contractible_simplex():
    tri = simplicial_delta([("a", "b", "c")])
    rep = reduced_homology(tri)
    assert all(rep.reduced_betti(i) == 0 for i in range(-1, 3))
    assert is_homology_spherical(tri, 2)  # top dimension, nothing below


def test_projective_plane_torsion():
    rep = reduced_homology(projective_plane())
    assert rep.reduced_betti(1) == 0
    assert rep.torsion_at(1) == (2,)
    assert rep.reduced_betti(2) == 0
    assert not is_homology_spherical(projective_plane(), 2)


def test_disjoint_edges():
    X = simplicial_delta([("a", "b"), ("c", "d")])
    rep = reduced_homology(X)
    assert rep.reduced_betti(0) == 1
    assert not rep.connected_through(0)
    assert rep.connected_through(-1)


def test_empty_complex():
    rep = reduced_homology(DeltaComplex({}))
    assert rep.reduced_betti(-1) == 1
    assert is_homology_spherical(DeltaComplex({}), -1)
    assert not rep.connected_through(-1)


def test_point():
    X = simplicial_delta([("p",)])
    assert is_homology_spherical(X, 0)
    assert reduced_homology(X).connected_through(10)


def test_loop_is_circle():
    loop = DeltaComplex({"v": (), "e": ("v", "v")})
    rep = reduced_homology(loop)
    assert rep.reduced_betti(1) == 1 and rep.reduced_betti(0) == 0


def test_max_degree_truncation():
    rep = reduced_homology(sphere(), max_degree=0)
    assert rep.computed_through == 0
    assert rep.reduced_betti(0) == 0
    with pytest.raises(ValueError):
        rep.reduced_betti(1)
    # degrees beyond dim are known to vanish even when truncated
    assert rep.reduced_betti(5) == 0


def test_induced_maps_circle_into_disk():
    tri = simplicial_delta([("a", "b", "c")])
    facts = induced_inclusion_maps(tri.skeleton(1), tri, 2)
    assert facts[1].epi and not facts[1].mono
    assert facts[0].iso and facts[-1].iso


def test_induced_maps_component_inclusion():
    two = simplicial_delta([("a", "b"), ("c", "d")])
    one = two.full_subcomplex({"a", "b"})
    facts = induced_inclusion_maps(one, two, 1)
    assert facts[0].mono and not facts[0].epi
    assert facts[-1].iso


def test_induced_maps_empty_into_nonempty():
    two = simplicial_delta([("a", "b")])
    facts = induced_inclusion_maps(DeltaComplex({}), two, 0)
    assert facts[-1].epi and not facts[-1].mono
    assert facts[0].iso


def test_induced_maps_onto_torsion():
    rp2 = projective_plane()
    facts = induced_inclusion_maps(rp2.skeleton(1), rp2, 1)
    assert facts[1].epi and not facts[1].mono
