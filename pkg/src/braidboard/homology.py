"""Exact reduced integer homology of Delta-complexes.

The chain complex is always augmented: C_{-1} = Z with the augmentation map
sending every vertex to 1. That makes reduced Betti numbers uniform, with
b~_{-1} = 1 exactly for the empty complex, and it lets inclusion-induced maps
be computed degree by degree with no special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .delta import DeltaComplex
from .snf import IntegerMatrix, SmithSolver, smith_normal_form


def _chain_rank(X: DeltaComplex, i: int) -> int:
    if i == -1:
        return 1
    if i < -1:
        return 0
    return len(X.cells_of_dim(i))


def _chain_matrix(X: DeltaComplex, i: int) -> IntegerMatrix:
    """Boundary map C_i -> C_{i-1} of the augmented complex, any i >= -1."""
    rows = _chain_rank(X, i - 1)
    cols = _chain_rank(X, i)
    if i == 0:
        return IntegerMatrix(rows, cols, ((1,) * cols,) if rows else ())
    if cols == 0 or rows == 0:
        return IntegerMatrix.zero(rows, cols)
    row_index = {c: r for r, c in enumerate(X.cells_of_dim(i - 1))}
    body = [[0] * cols for _ in range(rows)]
    for col, c in enumerate(X.cells_of_dim(i)):
        for j, face in enumerate(X.faces_of(c)):
            # += because a non-strict cell may repeat a face
            body[row_index[face]][col] += -1 if j % 2 else 1
    return IntegerMatrix.from_rows(body, cols=cols)


def boundary_matrices(X: DeltaComplex) -> list[IntegerMatrix]:
    """Augmented boundary maps [d_0, ..., d_dim]; d_0 is the augmentation."""
    return [_chain_matrix(X, i) for i in range(0, X.dim + 1)]


@dataclass(frozen=True)
class HomologyReport:
    """Reduced Betti numbers and torsion per degree, from -1 upward."""

    dim: int
    f_vector: tuple[int, ...]
    betti: Mapping[int, int]
    torsion: Mapping[int, tuple[int, ...]]
    computed_through: int  # degrees -1..computed_through are populated

    def reduced_betti(self, i: int) -> int:
        if i < -1 or i > self.dim:
            return 0
        if i > self.computed_through:
            raise ValueError(f"degree {i} not computed (through {self.computed_through})")
        return self.betti[i]

    def torsion_at(self, i: int) -> tuple[int, ...]:
        if i < -1 or i > self.dim:
            return ()
        if i > self.computed_through:
            raise ValueError(f"degree {i} not computed (through {self.computed_through})")
        return self.torsion[i]

    def connected_through(self, d: int) -> bool:
        """Homological d-connectivity: reduced homology vanishes in degrees <= d."""
        return all(
            self.reduced_betti(i) == 0 and not self.torsion_at(i)
            for i in range(-1, d + 1)
        )

    def spherical_of(self, d: int) -> bool:
        """Homologically d-spherical: dimension d and (d-1)-connected."""
        return self.dim == d and self.connected_through(d - 1)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "f_vector": list(self.f_vector),
            "betti": {str(i): self.betti[i] for i in sorted(self.betti)},
            "torsion": {
                str(i): list(self.torsion[i]) for i in sorted(self.torsion)
            },
        }


def reduced_homology(
    X: DeltaComplex, max_degree: Optional[int] = None
) -> HomologyReport:
    """Reduced integer homology via Smith normal form of the augmented complex.

    max_degree limits the computation (Betti/torsion reported for degrees
    -1..max_degree); by default everything through dim(X) is computed and the
    Euler characteristic identity is enforced.
    """
    top = X.dim
    limit = top if max_degree is None else min(max_degree, top)
    # diagonal of SNF(d_i) for i = 0..limit+1; rank = len of each
    diags: dict[int, tuple[int, ...]] = {}
    for i in range(0, limit + 2):
        if i > top:
            diags[i] = ()
        else:
            diags[i] = smith_normal_form(_chain_matrix(X, i)).diagonal
    betti: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for i in range(-1, limit + 1):
        rank_i = len(diags[i]) if i >= 0 else 0
        rank_up = len(diags[i + 1])
        betti[i] = _chain_rank(X, i) - rank_i - rank_up
        torsion[i] = tuple(d for d in diags[i + 1] if d != 1)
    report = HomologyReport(
        dim=top,
        f_vector=X.f_vector(),
        betti=betti,
        torsion=torsion,
        computed_through=limit,
    )
    if limit == top:
        euler = sum((-1) ** i * f for i, f in enumerate(report.f_vector))
        reduced_euler = sum((-1) ** i * betti[i] for i in range(-1, top + 1))
        if euler - 1 != reduced_euler:
            raise AssertionError("Euler characteristic mismatch; homology is wrong")
    return report


def is_homology_spherical(X: DeltaComplex, d: int) -> bool:
    """True iff dim(X) = d and reduced homology vanishes torsion-free below d.

    For d = -1 this holds exactly when X is empty.
    """
    if X.dim != d:
        return False
    return reduced_homology(X).spherical_of(d)


# -- inclusion-induced maps on homology ----------------------------------


@dataclass(frozen=True)
class DegreeMapFacts:
    mono: bool
    epi: bool

    @property
    def iso(self) -> bool:
        return self.mono and self.epi


def _hstack(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    assert a.rows == b.rows
    return IntegerMatrix(
        a.rows,
        a.cols + b.cols,
        tuple(ra + rb for ra, rb in zip(a.entries, b.entries)),
    )


def _from_columns(rows: int, cols: Sequence[Sequence[int]]) -> IntegerMatrix:
    return IntegerMatrix(
        rows, len(cols), tuple(tuple(col[i] for col in cols) for i in range(rows))
    )


class _GradedHomology:
    """Cycle bases and boundary relations of one complex, degree by degree.

    In degree i, H_i = Z^z / im(relations) where z = #columns of the cycle
    basis (a kernel lattice basis of d_i, hence a direct summand).
    """

    def __init__(self, X: DeltaComplex):
        self.X = X
        self._cycles: dict[int, IntegerMatrix] = {}
        self._relations: dict[int, IntegerMatrix] = {}

    def cycles(self, i: int) -> IntegerMatrix:
        if i not in self._cycles:
            solver = SmithSolver(_chain_matrix(self.X, i))
            basis = solver.kernel_basis()
            self._cycles[i] = _from_columns(_chain_rank(self.X, i), basis)
        return self._cycles[i]

    def relations(self, i: int) -> IntegerMatrix:
        if i not in self._relations:
            K = self.cycles(i)
            R = SmithSolver(K).solve_matrix(_chain_matrix(self.X, i + 1))
            if R is None:
                raise AssertionError("boundaries are cycles; solve cannot fail")
            self._relations[i] = R
        return self._relations[i]


def induced_inclusion_maps(
    A: DeltaComplex, X: DeltaComplex, top_degree: int
) -> dict[int, DegreeMapFacts]:
    """Mono/epi facts of H_i(A) -> H_i(X) for the inclusion, i = -1..top_degree.

    A must be a subcomplex of X sharing cell ids and face structure.
    """
    for c in A.cell_ids:
        if X.dim_of(c) != A.dim_of(c) or X.faces_of(c) != A.faces_of(c):
            raise AssertionError(f"cell {c!r} does not match between the complexes")
    ha, hx = _GradedHomology(A), _GradedHomology(X)
    out: dict[int, DegreeMapFacts] = {}
    for i in range(-1, top_degree + 1):
        K_a, R_a = ha.cycles(i), ha.relations(i)
        K_x, R_x = hx.cycles(i), hx.relations(i)
        if i == -1:
            incl = IntegerMatrix.identity(1)
        else:
            x_index = {c: r for r, c in enumerate(X.cells_of_dim(i))}
            rows = [[0] * K_a.rows for _ in range(_chain_rank(X, i))]
            for col, c in enumerate(A.cells_of_dim(i)):
                rows[x_index[c]][col] = 1
            incl = IntegerMatrix.from_rows(rows, cols=K_a.rows)
        M = SmithSolver(K_x).solve_matrix(incl.mul(K_a))
        if M is None:
            raise AssertionError("included cycles are cycles; solve cannot fail")
        # epi: [M | R_x] spans Z^{z_x} (all SNF divisors 1 at full row rank)
        stacked = _hstack(M, R_x)
        snf = smith_normal_form(stacked)
        epi = snf.rank == K_x.cols and all(d == 1 for d in snf.diagonal)
        # mono: every cycle of A whose image bounds in X already bounds in A
        if K_a.cols == 0:
            mono = True
        else:
            neg_rx = IntegerMatrix(
                R_x.rows, R_x.cols, tuple(tuple(-v for v in r) for r in R_x.entries)
            )
            ker = SmithSolver(_hstack(M, neg_rx)).kernel_basis()
            ra_solver = SmithSolver(R_a)
            mono = all(
                ra_solver.solve(vec[: K_a.cols]) is not None for vec in ker
            )
        out[i] = DegreeMapFacts(mono=mono, epi=epi)
    return out
