"""End-to-end acceptance run, one test per bundled criterion.

Each test prints the one-line summary of its criterion so the suite output
doubles as the acceptance report, and the criteria with a hard time budget
assert it.
"""

from __future__ import annotations

from braidboard import acceptance


def check(result, limit=None):
    print(result.line())
    assert result.passed, result.line()
    if limit is not None:
        assert result.elapsed < limit, f"over the {limit}s budget: {result.line()}"


def test_criterion_01_chessboard_connectivity_bound():
    check(acceptance.criterion_1(), limit=60)


def test_criterion_02_chessboard_cohen_macaulay_instances():
    check(acceptance.criterion_2(), limit=120)


def test_criterion_03_wedge_of_two_three_spheres():
    check(acceptance.criterion_3(), limit=60)


def test_criterion_04_forest_complexes_are_cm():
    check(acceptance.criterion_4(), limit=120)


def test_criterion_05_matching_complex_skeletons_are_cm():
    check(acceptance.criterion_5(), limit=120)


def test_criterion_06_braid_kernel_fuzz():
    check(acceptance.criterion_6())


def test_criterion_07_projection_face_square():
    check(acceptance.criterion_7())


def test_criterion_08_truncated_fiber_shadow():
    check(acceptance.criterion_8())


def test_criterion_09_quillen_fiber_pipeline():
    check(acceptance.criterion_9())


def test_criterion_10_descending_link_predictions():
    check(acceptance.criterion_10())


def test_criterion_11_homology_engine_invariants():
    check(acceptance.criterion_11())
