"""Smith normal form: hand values, fuzzed invariants, transforms, solving."""

from __future__ import annotations

import random

from braidboard.snf import IntegerMatrix, SmithSolver, smith_normal_form


def det(rows) -> int:
    """Independent oracle: cofactor expansion, exact integers."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, v in enumerate(rows[0]):
        if v:
            minor = [list(r[:j]) + list(r[j + 1 :]) for r in rows[1:]]
            total += (-1) ** j * v * det(minor)
    return total


def random_matrix(rng: random.Random, m: int, n: int, lo=-6, hi=6) -> IntegerMatrix:
    return IntegerMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)], cols=n
    )


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, k = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == k:
            continue
        q = rng.randint(-3, 3)
        for j in range(n):
            rows[i][j] += q * rows[k][j]
    return rows


def test_hand_examples():
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]])).diagonal == (1, 6)
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 4], [2, 2]])).diagonal == (2, 2)
    zero = IntegerMatrix.zero(3, 2)
    res = smith_normal_form(zero)
    assert res.diagonal == () and res.rank == 0


def test_divisibility_chain_and_det():
    rng = random.Random(20260814)
    for _ in range(40):
        n = rng.randint(1, 4)
        M = random_matrix(rng, n, n)
        res = smith_normal_form(M)
        for a, b in zip(res.diagonal, res.diagonal[1:]):
            assert b % a == 0
        d = det([list(r) for r in M.entries])
        prod = 1
        for v in res.diagonal:
            prod *= v
        if d != 0:
            assert res.rank == n and prod == abs(d)
        else:
            assert res.rank < n


def test_invariance_under_unimodular_multiplication():
    rng = random.Random(99)
    base = random_matrix(rng, 3, 4)
    want = smith_normal_form(base).diagonal
    for _ in range(25):
        U = IntegerMatrix.from_rows(random_unimodular(rng, 3))
        V = IntegerMatrix.from_rows(random_unimodular(rng, 4))
        assert smith_normal_form(U.mul(base).mul(V)).diagonal == want


def test_transforms_are_unimodular_and_diagonalize():
    rng = random.Random(7)
    for _ in range(20):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = random_matrix(rng, m, n)
        res = smith_normal_form(M, transforms=True)
        assert abs(det([list(r) for r in res.U.entries])) == 1
        assert abs(det([list(r) for r in res.V.entries])) == 1
        D = res.U.mul(M).mul(res.V)
        for i in range(m):
            for j in range(n):
                if i == j and i < len(res.diagonal):
                    assert D.entries[i][j] == res.diagonal[i]
                else:
                    assert D.entries[i][j] == 0


def test_kernel_basis_is_primitive():
    rng = random.Random(4242)
    for _ in range(20):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        solver = SmithSolver(M)
        basis = solver.kernel_basis()
        assert len(basis) == n - solver.rank
        for vec in basis:
            out = [sum(M.entries[i][j] * vec[j] for j in range(n)) for i in range(m)]
            assert all(v == 0 for v in out)
        if basis:
            # a kernel lattice basis extends to a Z-basis: SNF all ones
            K = IntegerMatrix.from_rows(
                [[col[i] for col in basis] for i in range(n)], cols=len(basis)
            )
            res = smith_normal_form(K)
            assert res.diagonal == (1,) * len(basis)


def test_solve_round_trip_and_unsolvable():
    rng = random.Random(11)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = random_matrix(rng, m, n)
        x = [rng.randint(-5, 5) for _ in range(n)]
        b = [sum(M.entries[i][j] * x[j] for j in range(n)) for i in range(m)]
        sol = SmithSolver(M).solve(b)
        assert sol is not None
        back = [sum(M.entries[i][j] * sol[j] for j in range(n)) for i in range(m)]
        assert back == b
    assert SmithSolver(IntegerMatrix.from_rows([[2]])).solve([1]) is None
    assert SmithSolver(IntegerMatrix.from_rows([[1, 0], [0, 0]])).solve([0, 1]) is None


def test_solve_matrix():
    M = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    B = IntegerMatrix.from_rows([[5, 6], [11, 14]])
    X = SmithSolver(M).solve_matrix(B)
    assert X is not None
    assert M.mul(X).entries == B.entries
