"""Delta-complexes: graded cells with ordered face maps.

A d-cell carries an ordered list of d+1 faces (the i-th face deletes the i-th
vertex slot); 0-cells have no recorded faces. Cells are named by opaque string
ids, unique across dimensions, so a complex is just a map id -> face ids. The
simplicial identity face_i(face_j(c)) = face_{j-1}(face_i(c)) for i < j is
validated on construction.

A complex is *strict* when no cell identifies two of its iterated faces in any
codimension; strict complexes have honest simplex boundaries and admit the
direct Cohen-Macaulay check. Simplicial complexes are exactly the strict
complexes in which a cell is determined by its vertex set.

The dimension of the empty complex is -1 ((-1)-connected iff non-empty).
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .poset import Poset

CHAIN_SEP = "<"  # joins poset elements into order-complex cell ids


class DeltaComplex:
    """Immutable Delta-complex; construct via a faces map or the helpers below."""

    def __init__(self, faces: Mapping[str, Sequence[str]]):
        self._faces: dict[str, tuple[str, ...]] = {
            c: tuple(fs) for c, fs in faces.items()
        }
        self._dim_of: dict[str, int] = {}
        for c, fs in self._faces.items():
            self._dim_of[c] = len(fs) - 1 if fs else 0
        self._validate()
        self._slots: dict[str, tuple[str, ...]] = {}
        grading: dict[int, list[str]] = {}
        for c in sorted(self._faces):
            grading.setdefault(self._dim_of[c], []).append(c)
        self._grading: dict[int, tuple[str, ...]] = {
            d: tuple(cs) for d, cs in grading.items()
        }

    def _validate(self) -> None:
        for c, fs in self._faces.items():
            d = self._dim_of[c]
            for f in fs:
                if f not in self._faces:
                    raise DomainError(f"cell {c!r} has unknown face {f!r}")
                if self._dim_of[f] != d - 1:
                    raise DomainError(
                        f"cell {c!r} (dim {d}) has face {f!r} of dim {self._dim_of[f]}"
                    )
            if d >= 2:
                for j in range(d + 1):
                    for i in range(j):
                        # face_i(face_j(c)) == face_{j-1}(face_i(c))
                        if self._faces[fs[j]][i] != self._faces[fs[i]][j - 1]:
                            raise DomainError(
                                f"simplicial identity fails at cell {c!r} (i={i}, j={j})"
                            )

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self._grading) if self._grading else -1

    @property
    def cell_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self._faces))

    def cells_of_dim(self, d: int) -> tuple[str, ...]:
        return self._grading.get(d, ())

    def dim_of(self, c: str) -> int:
        self._require(c)
        return self._dim_of[c]

    def faces_of(self, c: str) -> tuple[str, ...]:
        self._require(c)
        return self._faces[c]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._grading.get(d, ())) for d in range(self.dim + 1))

    def is_empty(self) -> bool:
        return not self._faces

    def _require(self, c: str) -> None:
        if c not in self._faces:
            raise DomainError(f"unknown cell id {c!r}")

    def vertex_slots(self, c: str) -> tuple[str, ...]:
        """Vertex ids in slot order, recovered through iterated face maps."""
        self._require(c)
        cached = self._slots.get(c)
        if cached is not None:
            return cached
        d = self._dim_of[c]
        if d == 0:
            slots = (c,)
        else:
            fs = self._faces[c]
            rest = self.vertex_slots(fs[0])  # slots 1..d survive deleting slot 0
            first = self.vertex_slots(fs[1])[0]  # slot 0 survives deleting slot 1
            slots = (first,) + rest
        self._slots[c] = slots
        return slots

    def subcell(self, c: str, slots: Sequence[int]) -> str:
        """The iterated face of c spanned by the given (sorted) slot indices."""
        self._require(c)
        d = self._dim_of[c]
        keep = list(slots)
        if sorted(set(keep)) != keep or not keep or keep[0] < 0 or keep[-1] > d:
            raise DomainError(f"bad slot selection {slots!r} for cell of dim {d}")
        drop = [i for i in range(d + 1) if i not in set(keep)]
        cur = c
        for i in reversed(drop):  # delete high slots first so indices stay valid
            cur = self._faces[cur][i]
        return cur

    # -- structure -------------------------------------------------------

    def cell_poset(self) -> Poset:
        return Poset({c: set(fs) for c, fs in self._faces.items()})

    def is_strict(self) -> bool:
        """True iff no cell identifies two of its faces in any codimension."""
        from itertools import combinations

        for c in self._faces:
            d = self._dim_of[c]
            for size in range(1, d + 1):
                seen = set()
                for keep in combinations(range(d + 1), size):
                    sub = self.subcell(c, keep)
                    if sub in seen:
                        return False
                    seen.add(sub)
        return True

    def is_simplicial(self) -> bool:
        """Strict, and every cell is determined by its vertex set."""
        seen: set[frozenset[str]] = set()
        for c in self._faces:
            slots = self.vertex_slots(c)
            vs = frozenset(slots)
            if len(vs) != len(slots) or vs in seen:
                return False
            seen.add(vs)
        return True

    def skeleton(self, k: int) -> "DeltaComplex":
        """Drop all cells above dimension k."""
        return DeltaComplex(
            {c: fs for c, fs in self._faces.items() if self._dim_of[c] <= k}
        )

    def full_subcomplex(self, vertices: Iterable[str]) -> "DeltaComplex":
        """Cells all of whose vertices lie in the given set."""
        keep = set(vertices)
        cells = {
            c: fs
            for c, fs in self._faces.items()
            if all(v in keep for v in self.vertex_slots(c))
        }
        return DeltaComplex(cells)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        rows = [[self._dim_of[c], c, list(self._faces[c])] for c in sorted(self._faces)]
        return json.dumps({"cells": rows}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "DeltaComplex":
        try:
            data = json.loads(text)
            rows = data["cells"]
            faces = {row[1]: row[2] for row in rows}
        except (json.JSONDecodeError, TypeError, KeyError, IndexError) as exc:
            raise DomainError(f"malformed complex JSON: {exc}") from exc
        return cls(faces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DeltaComplex) and self._faces == other._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, c: str) -> bool:
        return c in self._faces

    def __repr__(self) -> str:
        return f"DeltaComplex(f-vector {self.f_vector()})"


def simplicial_delta(cells: Iterable[Sequence[str]], sep: str = "|") -> DeltaComplex:
    """Simplicial complex generated by the given ordered vertex tuples.

    Each cell is an ordered tuple of distinct vertex ids; all faces obtained
    by deleting entries are added automatically. Cell ids are the slot tuples
    joined by `sep`.
    """
    by_tuple: set[tuple[str, ...]] = set()
    queue: list[tuple[str, ...]] = []
    for cell in cells:
        t = tuple(cell)
        if len(set(t)) != len(t):
            raise DomainError(f"repeated vertex in simplex {t!r}")
        if t and t not in by_tuple:
            by_tuple.add(t)
            queue.append(t)
    while queue:
        t = queue.pop()
        if len(t) == 1:
            continue
        for i in range(len(t)):
            sub = t[:i] + t[i + 1 :]
            if sub not in by_tuple:
                by_tuple.add(sub)
                queue.append(sub)
    faces: dict[str, tuple[str, ...]] = {}
    for t in by_tuple:
        cid = sep.join(t)
        if len(t) == 1:
            faces[cid] = ()
        else:
            faces[cid] = tuple(
                sep.join(t[:i] + t[i + 1 :]) for i in range(len(t))
            )
    return DeltaComplex(faces)


def order_complex(P: Poset) -> DeltaComplex:
    """Simplicial complex of strict chains; d-cells are chains of length d."""
    for p in P.elements:
        if CHAIN_SEP in p:
            raise DomainError(f"element id {p!r} contains reserved {CHAIN_SEP!r}")
    return simplicial_delta(P.chains(), sep=CHAIN_SEP)


def cell_poset(X: DeltaComplex) -> Poset:
    """Poset of cells under the iterated face relation; height of a d-cell is d."""
    return X.cell_poset()
