"""Exact integer matrices and Smith normal form.

Everything here is fraction-free over Python's arbitrary-precision integers;
no floating point, no fixed-width overflow. Two elimination paths:

* a sparse dict-of-dicts reduction used for the (large, very sparse) boundary
  matrices, returning just the diagonal;
* a dense textbook reduction that tracks unimodular transforms U, V with
  U*M*V = D, used for kernel bases and exact solving.

The published diagonal is always the canonical divisibility chain
d1 | d2 | ... | dk with all di > 0 (enforced by pairwise gcd/lcm, which needs
no factorization).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.entries) == self.rows
        assert all(len(r) == self.cols for r in self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None):
        rows = [tuple(int(v) for v in r) for r in rows]
        if rows:
            width = len(rows[0])
        else:
            width = cols if cols is not None else 0
        return cls(len(rows), width, tuple(rows))

    @classmethod
    def zero(cls, rows: int, cols: int):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def mul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        assert self.cols == other.rows
        out = tuple(
            tuple(
                sum(row[k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)


@dataclass(frozen=True)
class SmithResult:
    diagonal: tuple[int, ...]  # divisibility chain, all positive
    rank: int
    U: Optional[IntegerMatrix] = None  # unimodular, U*M*V = diag
    V: Optional[IntegerMatrix] = None


def _divisor_chain(pivots: Iterable[int]) -> tuple[int, ...]:
    ds = sorted(abs(p) for p in pivots if p)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
        ds.sort()
    return tuple(ds)


# -- sparse diagonal-only path ------------------------------------------


def _sparse_diagonal(entries: Sequence[Sequence[int]]) -> list[int]:
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(entries):
        r = {j: v for j, v in enumerate(row) if v}
        if r:
            rows[i] = r
            for j in r:
                cols.setdefault(j, set()).add(i)

    def row_sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        target = rows[i]
        for j, v in rows[k].items():
            new = target.get(j, 0) - q * v
            if new:
                target[j] = new
                cols.setdefault(j, set()).add(i)
            elif j in target:
                del target[j]
                cols[j].discard(i)
                if not cols[j]:
                    del cols[j]
        if not target:
            del rows[i]

    def col_sub(j: int, k: int, q: int) -> None:
        # col_j -= q * col_k
        for i in list(cols.get(k, ())):
            v = rows[i][k]
            new = rows[i].get(j, 0) - q * v
            if new:
                rows[i][j] = new
                cols.setdefault(j, set()).add(i)
            elif j in rows[i]:
                del rows[i][j]
                cols[j].discard(i)
                if not cols[j]:
                    del cols[j]

    pivots: list[int] = []
    while rows:
        best = None
        for i, r in rows.items():
            ri = len(r)
            for j, v in r.items():
                a = abs(v)
                key = (a != 1, a, (ri - 1) * (len(cols[j]) - 1), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        _, pi, pj = best
        while True:
            pv = rows[pi][pj]
            if pv < 0:
                for j in list(rows[pi]):
                    rows[pi][j] = -rows[pi][j]
                pv = -pv
            col_rest = [i for i in cols[pj] if i != pi]
            if col_rest:
                i = col_rest[0]
                q = rows[i][pj] // pv
                if q:
                    row_sub(i, pi, q)
                if i in rows and pj in rows.get(i, {}):
                    pi = i  # remainder is smaller than the old pivot
                continue
            row_rest = [j for j in rows[pi] if j != pj]
            if row_rest:
                j = row_rest[0]
                q = rows[pi][j] // pv
                if q:
                    col_sub(j, pj, q)
                if rows[pi].get(j):
                    pj = j
                continue
            break
        pivots.append(rows[pi][pj])
        del rows[pi]
        del cols[pj]
    return pivots


# -- dense path with transforms -----------------------------------------


def _dense_smith(
    entries: Sequence[Sequence[int]], m: int, n: int
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    a = [list(row) for row in entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def row_sub(i, k, q):
        ai, ak = a[i], a[k]
        for j in range(n):
            ai[j] -= q * ak[j]
        ui, uk = U[i], U[k]
        for j in range(m):
            ui[j] -= q * uk[j]

    def col_sub(j, k, q):
        for row in a:
            row[j] -= q * row[k]
        for row in V:
            row[j] -= q * row[k]

    def negate_row(i):
        a[i] = [-v for v in a[i]]
        U[i] = [-v for v in U[i]]

    t = 0
    while True:
        # find a pivot of minimal |value| in the trailing submatrix
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
            if pivot and abs(pivot[2]) == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            pv = a[t][t]
            moved = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // pv
                    if q:
                        row_sub(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // pv
                    if q:
                        col_sub(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if moved:
                continue
            # pivot must divide the rest of the submatrix for the chain
            culprit = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % pv:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_sub(t, culprit, -1)  # add the offending row, then re-reduce
        t += 1
    return a, U, V


def smith_normal_form(M: IntegerMatrix, transforms: bool = False) -> SmithResult:
    """Smith normal form; diagonal is the canonical divisibility chain.

    With transforms=True the result carries unimodular U (rows x rows) and
    V (cols x cols) with U*M*V equal to the diagonal matrix.
    """
    if not transforms:
        pivots = _sparse_diagonal(M.entries)
        chain = _divisor_chain(pivots)
        return SmithResult(chain, len(chain))
    a, U, V = _dense_smith(M.entries, M.rows, M.cols)
    diag = [a[i][i] for i in range(min(M.rows, M.cols)) if a[i][i]]
    return SmithResult(
        tuple(diag),
        len(diag),
        IntegerMatrix.from_rows(U, cols=M.rows),
        IntegerMatrix.from_rows(V, cols=M.cols),
    )


def rank(M: IntegerMatrix) -> int:
    return smith_normal_form(M).rank


class SmithSolver:
    """Decomposes M once; answers kernel and exact M*x = b queries."""

    def __init__(self, M: IntegerMatrix):
        self.M = M
        a, U, V = _dense_smith(M.entries, M.rows, M.cols)
        self.diag = [a[i][i] for i in range(min(M.rows, M.cols))]
        self.rank = sum(1 for d in self.diag if d)
        self.U = U
        self.V = V

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of the integer kernel lattice (a direct summand)."""
        n = self.M.cols
        return [
            tuple(self.V[i][j] for i in range(n)) for j in range(self.rank, n)
        ]

    def solve(self, b: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Exact integer solution x of M x = b, or None."""
        m, n = self.M.rows, self.M.cols
        assert len(b) == m
        ub = [sum(self.U[i][j] * b[j] for j in range(m)) for i in range(m)]
        y = [0] * n
        for i in range(m):
            d = self.diag[i] if i < len(self.diag) else 0
            if d:
                if ub[i] % d:
                    return None
                y[i] = ub[i] // d
            elif ub[i]:
                return None
        return tuple(
            sum(self.V[i][j] * y[j] for j in range(n)) for i in range(n)
        )

    def solve_matrix(self, B: IntegerMatrix) -> Optional[IntegerMatrix]:
        """Exact X with M X = B, or None."""
        assert B.rows == self.M.rows
        cols = []
        for j in range(B.cols):
            x = self.solve([B.entries[i][j] for i in range(B.rows)])
            if x is None:
                return None
            cols.append(x)
        rows = tuple(
            tuple(cols[j][i] for j in range(B.cols)) for i in range(self.M.cols)
        )
        return IntegerMatrix(self.M.cols, B.cols, rows)
