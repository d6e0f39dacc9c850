"""Finite posets with the topological neighborhood operators.

A poset is stored by its covering (Hasse) relation; the full order is derived
lazily and memoized, since the posets arising from cell complexes are shallow
but wide. Element ids are opaque strings. The neighborhood operators return
induced subposets:

    closure(p)  = {q : q <= p}          boundary(p) = {q : q < p}
    star(p)     = {q : q >= p}          link(p)     = {q : q > p}

and open_interval(p, q) = {r : p < r < q} = link(p) intersect boundary(q).

Height of an element is the length of a maximum chain ending at it; dim(P) is
the maximum height, -1 for the empty poset.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import DomainError

NEIGHBORHOOD_KINDS = ("closure", "boundary", "star", "link")


class Poset:
    """Immutable finite poset given by downward covers."""

    def __init__(self, lower_covers: Mapping[str, Iterable[str]]):
        self._lower: dict[str, tuple[str, ...]] = {
            p: tuple(sorted(set(qs))) for p, qs in lower_covers.items()
        }
        for p, qs in self._lower.items():
            for q in qs:
                if q not in self._lower:
                    raise DomainError(f"cover {q!r} of {p!r} is not an element")
                if q == p:
                    raise DomainError(f"element {p!r} covers itself")
        self.elements: tuple[str, ...] = tuple(sorted(self._lower))
        self._upper: dict[str, tuple[str, ...]] = {p: () for p in self.elements}
        ups: dict[str, list[str]] = {p: [] for p in self.elements}
        for p, qs in self._lower.items():
            for q in qs:
                ups[q].append(p)
        self._upper = {p: tuple(sorted(us)) for p, us in ups.items()}
        self._below: dict[str, frozenset[str]] = {}
        self._above: dict[str, frozenset[str]] = {}
        self._height: dict[str, int] = {}
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        # antisymmetry == the cover digraph is acyclic
        state: dict[str, int] = {}
        for root in self.elements:
            if root in state:
                continue
            stack: list[tuple[str, int]] = [(root, 0)]
            while stack:
                p, i = stack.pop()
                if i == 0:
                    if state.get(p) == 2:
                        continue
                    state[p] = 1
                covers = self._lower[p]
                if i < len(covers):
                    stack.append((p, i + 1))
                    q = covers[i]
                    if state.get(q) == 1:
                        raise DomainError(f"order relation has a cycle through {q!r}")
                    if state.get(q) != 2:
                        stack.append((q, 0))
                else:
                    state[p] = 2

    # -- order queries -------------------------------------------------

    def lower_covers(self, p: str) -> tuple[str, ...]:
        self._require(p)
        return self._lower[p]

    def upper_covers(self, p: str) -> tuple[str, ...]:
        self._require(p)
        return self._upper[p]

    def below(self, p: str) -> frozenset[str]:
        """All elements strictly below p."""
        self._require(p)
        cached = self._below.get(p)
        if cached is None:
            acc: set[str] = set()
            for q in self._lower[p]:
                acc.add(q)
                acc |= self.below(q)
            cached = self._below[p] = frozenset(acc)
        return cached

    def above(self, p: str) -> frozenset[str]:
        """All elements strictly above p."""
        self._require(p)
        cached = self._above.get(p)
        if cached is None:
            acc: set[str] = set()
            for q in self._upper[p]:
                acc.add(q)
                acc |= self.above(q)
            cached = self._above[p] = frozenset(acc)
        return cached

    def leq(self, p: str, q: str) -> bool:
        self._require(p)
        self._require(q)
        return p == q or p in self.below(q)

    def height(self, p: str) -> int:
        """Length of a maximum chain ending at p."""
        self._require(p)
        cached = self._height.get(p)
        if cached is None:
            covers = self._lower[p]
            cached = 0 if not covers else 1 + max(self.height(q) for q in covers)
            self._height[p] = cached
        return cached

    @property
    def dim(self) -> int:
        if not self.elements:
            return -1
        return max(self.height(p) for p in self.elements)

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(p for p in self.elements if not self._upper[p])

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(p for p in self.elements if not self._lower[p])

    def _require(self, p: str) -> None:
        if p not in self._lower:
            raise DomainError(f"unknown element id {p!r}")

    # -- subposets -----------------------------------------------------

    def induced(self, subset: Iterable[str]) -> "Poset":
        keep = set(subset)
        for p in keep:
            self._require(p)
        lower: dict[str, tuple[str, ...]] = {}
        for p in keep:
            cand = [q for q in self.below(p) if q in keep]
            # Hasse covers of the induced order: maximal elements of cand
            covers = [q for q in cand if not any(q in self.below(r) for r in cand)]
            lower[p] = tuple(sorted(covers))
        return Poset(lower)

    def chains(self) -> list[tuple[str, ...]]:
        """All non-empty strict chains, each listed in increasing order."""
        out: list[tuple[str, ...]] = []
        elements = self.elements

        def extend(chain: tuple[str, ...]) -> None:
            out.append(chain)
            for q in sorted(self.above(chain[-1])):
                extend(chain + (q,))

        for p in elements:
            extend((p,))
        return out

    # -- serialization -------------------------------------------------

    def to_json(self) -> str:
        rows = [[self.height(p), p, list(self._lower[p])] for p in self.elements]
        return json.dumps({"cells": rows}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        try:
            data = json.loads(text)
            rows = data["cells"]
            lower = {row[1]: row[2] for row in rows}
        except (json.JSONDecodeError, TypeError, KeyError, IndexError) as exc:
            raise DomainError(f"malformed poset JSON: {exc}") from exc
        return cls(lower)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: str) -> bool:
        return p in self._lower

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self._lower == other._lower

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, dim {self.dim})"


def poset_neighborhood(P: Poset, p: str, kind: str) -> Poset:
    """Induced subposet of one of closure/boundary/star/link at p."""
    if kind not in NEIGHBORHOOD_KINDS:
        raise DomainError(f"unknown neighborhood kind {kind!r}")
    if kind == "closure":
        keep = set(P.below(p)) | {p}
    elif kind == "boundary":
        keep = set(P.below(p))
    elif kind == "star":
        keep = set(P.above(p)) | {p}
    else:
        keep = set(P.above(p))
    return P.induced(keep)


def open_interval(P: Poset, p: str, q: str) -> Poset:
    """Elements strictly between p and q (empty when incomparable or equal)."""
    keep = P.above(p) & P.below(q)
    return P.induced(keep)
