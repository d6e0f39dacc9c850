"""Multigraphs, subgraph-closed families, and their simplicial complexes.

A family complex has one d-cell per member with d+1 edges; the chessboard
complex is the matching complex of a complete bipartite graph, built directly
from rook placements with the same vertex labels.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

from .delta import DeltaComplex, simplicial_delta
from .errors import DomainError, FamilyNotClosedError

_RESERVED = ("|", "<")


def _check_label(label: str, what: str) -> None:
    for ch in _RESERVED:
        if ch in label:
            raise DomainError(f"{what} {label!r} contains reserved character {ch!r}")


@dataclass(frozen=True)
class MultiGraph:
    """Finite multigraph: loops and parallel edges allowed, edge ids unique."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (endpoint, endpoint, edge id)

    def __post_init__(self):
        seen_v = set()
        for v in self.vertices:
            _check_label(v, "vertex")
            if v in seen_v:
                raise DomainError(f"repeated vertex label {v!r}")
            seen_v.add(v)
        seen_e = set()
        for u, v, eid in self.edges:
            _check_label(eid, "edge id")
            if u not in seen_v or v not in seen_v:
                raise DomainError(f"edge {eid!r} has unknown endpoint")
            if eid in seen_e:
                raise DomainError(f"repeated edge id {eid!r}")
            seen_e.add(eid)

    @classmethod
    def build(
        cls, vertices: Iterable[str], edges: Iterable[Sequence[str]]
    ) -> "MultiGraph":
        return cls(tuple(vertices), tuple((u, v, e) for u, v, e in edges))

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for _, _, e in self.edges)

    def endpoints(self, eid: str) -> tuple[str, str]:
        for u, v, e in self.edges:
            if e == eid:
                return (u, v)
        raise DomainError(f"unknown edge id {eid!r}")

    def component_count(self, edge_subset: Optional[Iterable[str]] = None) -> int:
        keep = None if edge_subset is None else set(edge_subset)
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, e in self.edges:
            if keep is None or e in keep:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        return len({find(v) for v in self.vertices})

    def spanning_subgraph(self, edge_subset: Iterable[str]) -> "MultiGraph":
        keep = set(edge_subset)
        unknown = keep - set(self.edge_ids())
        if unknown:
            raise DomainError(f"unknown edge ids {sorted(unknown)!r}")
        return MultiGraph(
            self.vertices, tuple(e for e in self.edges if e[2] in keep)
        )

    def is_simple(self) -> bool:
        pairs = set()
        for u, v, _ in self.edges:
            if u == v:
                return False
            key = (u, v) if u <= v else (v, u)
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": list(self.vertices),
                "edges": [[u, v, e] for u, v, e in self.edges],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "MultiGraph":
        data = json.loads(text)
        try:
            return cls.build(data["vertices"], data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed graph JSON: {exc}") from exc


def complete_graph(n: int) -> MultiGraph:
    """K_n with vertices "1".."n" and edge ids "i-j" for i < j."""
    if n < 0:
        raise DomainError("vertex count must be non-negative")
    vs = tuple(str(i) for i in range(1, n + 1))
    es = tuple(
        (str(i), str(j), f"{i}-{j}")
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )
    return MultiGraph(vs, es)


def complete_bipartite(m: int, n: int) -> MultiGraph:
    """K_{m,n} with parts "r1".."rm", "c1".."cn" and edge ids "i,j".

    Edge ids coincide with the vertex labels of chessboard_complex(m, n), so
    the matching complex of this graph is the chessboard complex on the nose.
    """
    if m < 0 or n < 0:
        raise DomainError("part sizes must be non-negative")
    vs = tuple(f"r{i}" for i in range(1, m + 1)) + tuple(
        f"c{j}" for j in range(1, n + 1)
    )
    es = tuple(
        (f"r{i}", f"c{j}", f"{i},{j}")
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    )
    return MultiGraph(vs, es)


# -- families -------------------------------------------------------------

FAMILY_NAMES = ("matchings", "forests", "subgraphs", "not2connected", "custom")


@dataclass(frozen=True)
class GraphFamily:
    """Subgraph-closed set of edge-subsets of a ground multigraph."""

    ground: MultiGraph
    name: str
    membership: Callable[[frozenset[str]], bool] = field(repr=False)

    def __call__(self, edge_ids: Iterable[str]) -> bool:
        return bool(self.membership(frozenset(edge_ids)))


def _is_matching(G: MultiGraph, subset: frozenset[str]) -> bool:
    used: set[str] = set()
    for u, v, e in G.edges:
        if e in subset:
            if u in used or v in used or u == v:
                return False
            used.add(u)
            used.add(v)
    return True


def _is_forest(G: MultiGraph, subset: frozenset[str]) -> bool:
    parent = {v: v for v in G.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, e in G.edges:
        if e in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def matchings_family(G: MultiGraph) -> GraphFamily:
    """Edge sets meeting each vertex at most once; loops are never matchings."""
    return GraphFamily(G, "matchings", lambda s: _is_matching(G, s))


def forests_family(G: MultiGraph) -> GraphFamily:
    """Acyclic edge sets; a loop or a parallel pair counts as a cycle."""
    return GraphFamily(G, "forests", lambda s: _is_forest(G, s))


def subgraphs_family(G: MultiGraph) -> GraphFamily:
    """Every edge set; the complex is a full simplex on the edges."""
    return GraphFamily(G, "subgraphs", lambda s: True)


def is_2_connected(G: MultiGraph) -> bool:
    """At least 3 vertices, connected, and no cut vertex. Simple graphs only."""
    if not G.is_simple():
        raise DomainError("2-connectivity is defined here for simple graphs only")
    if len(G.vertices) < 3:
        return False
    if G.component_count() != 1:
        return False
    for v in G.vertices:
        rest = MultiGraph(
            tuple(w for w in G.vertices if w != v),
            tuple(e for e in G.edges if v not in (e[0], e[1])),
        )
        if rest.component_count() != 1:
            return False
    return True


def not2connected_family(G: MultiGraph) -> GraphFamily:
    """Edge sets whose spanning subgraph (all of V) is not 2-connected."""
    if not G.is_simple():
        raise DomainError("not2connected family needs a simple ground graph")
    return GraphFamily(
        G, "not2connected", lambda s: not is_2_connected(G.spanning_subgraph(s))
    )


def custom_family(
    G: MultiGraph,
    predicate: Callable[[frozenset[str]], bool],
    samples: int = 1000,
    seed: int = 0,
) -> GraphFamily:
    """Wrap an arbitrary predicate; spot-check subgraph-closure by sampling.

    Draws `samples` random edge subsets; whenever a member is drawn, one
    random single-edge deletion is required to stay in the family.
    """
    ids = list(G.edge_ids())
    rng = random.Random(seed)
    for _ in range(samples):
        subset = frozenset(e for e in ids if rng.random() < 0.5)
        if subset and predicate(subset):
            e = rng.choice(sorted(subset))
            smaller = subset - {e}
            if not predicate(smaller):
                raise FamilyNotClosedError(
                    f"member {sorted(subset)!r} has non-member subset {sorted(smaller)!r}"
                )
    return GraphFamily(G, "custom", predicate)


def builtin_family(G: MultiGraph, name: str) -> GraphFamily:
    factories = {
        "matchings": matchings_family,
        "forests": forests_family,
        "subgraphs": subgraphs_family,
        "not2connected": not2connected_family,
    }
    if name not in factories:
        raise DomainError(f"unknown family name {name!r}; expected one of {sorted(factories)}")
    return factories[name](G)


def family_members(F: GraphFamily) -> list[frozenset[str]]:
    """All non-empty members, found level by level from single edges.

    Raises FamilyNotClosedError if a member turns up with a rejected subset.
    """
    ids = sorted(F.ground.edge_ids())
    level = [frozenset([e]) for e in ids if F.membership(frozenset([e]))]
    members: list[frozenset[str]] = list(level)
    while level:
        prev = set(level)
        nxt: set[frozenset[str]] = set()
        for s in level:
            for e in ids:
                if e not in s:
                    bigger = s | {e}
                    if bigger not in nxt and F.membership(bigger):
                        nxt.add(bigger)
        for s in nxt:
            for e in sorted(s):
                if s - {e} not in prev:
                    raise FamilyNotClosedError(
                        f"member {sorted(s)!r} has non-member subset {sorted(s - {e})!r}"
                    )
        level = sorted(nxt, key=sorted)
        members.extend(level)
    return members


def graph_complex(F: GraphFamily) -> DeltaComplex:
    """Simplicial complex with one (k-1)-cell per k-edge member of F."""
    cells = [tuple(sorted(s)) for s in family_members(F)]
    return simplicial_delta(cells)


def family_link(F: GraphFamily, member: Iterable[str]) -> GraphFamily:
    """Family of members edge-disjoint from `member` that extend it within F.

    Its complex is the link of the corresponding cell in graph_complex(F).
    """
    g = frozenset(member)
    if not F.membership(g):
        raise DomainError(f"{sorted(g)!r} is not a member of the family")
    return GraphFamily(
        F.ground,
        "custom",
        lambda s: not (s & g) and F.membership(s | g),
    )


# -- edge surgery ---------------------------------------------------------


def contract(G: MultiGraph, sigma: Iterable[str]) -> MultiGraph:
    """Contract a forest of edges; vertex count drops by |sigma|.

    Merged vertices take the lexicographically least label of their class.
    """
    chosen = set(sigma)
    unknown = chosen - set(G.edge_ids())
    if unknown:
        raise DomainError(f"unknown edge ids {sorted(unknown)!r}")
    parent = {v: v for v in G.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, e in G.edges:
        if e in chosen:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise DomainError("edge set to contract contains a cycle")
            parent[ru] = rv
    classes: dict[str, list[str]] = {}
    for v in G.vertices:
        classes.setdefault(find(v), []).append(v)
    rep = {root: min(vs) for root, vs in classes.items()}
    label = {v: rep[find(v)] for v in G.vertices}
    new_vs = tuple(sorted(set(label.values()), key=G.vertices.index))
    new_es = tuple(
        (label[u], label[v], e) for u, v, e in G.edges if e not in chosen
    )
    return MultiGraph(new_vs, new_es)


def delete_edge(G: MultiGraph, eid: str) -> tuple[MultiGraph, bool]:
    """Remove one edge; also reports whether it was separating."""
    if eid not in G.edge_ids():
        raise DomainError(f"unknown edge id {eid!r}")
    smaller = MultiGraph(G.vertices, tuple(e for e in G.edges if e[2] != eid))
    return smaller, smaller.component_count() > G.component_count()


# -- chessboard complexes --------------------------------------------------


def chessboard_vertex(i: int, j: int) -> str:
    return f"{i},{j}"


def chessboard_cell_id(placement: Iterable[tuple[int, int]]) -> str:
    squares = sorted(set(placement))
    return "|".join(chessboard_vertex(i, j) for i, j in squares)


def chessboard_complex(m: int, n: int) -> DeltaComplex:
    """Non-attacking rook placements on an m x n board, as a complex.

    Vertices are squares "i,j" (1-based); a set of squares spans a simplex
    iff no two share a row or a column. Equals the matching complex of
    K_{m,n} with the same labels.
    """
    if m < 1 or n < 1:
        raise DomainError("board sides must be at least 1")
    cells: list[tuple[str, ...]] = []
    top = min(m, n)
    for k in range(1, top + 1):
        for rows in itertools.combinations(range(1, m + 1), k):
            for cols in itertools.permutations(range(1, n + 1), k):
                squares = sorted(zip(rows, cols))
                cells.append(tuple(chessboard_vertex(i, j) for i, j in squares))
    return simplicial_delta(cells)


class ConnectivityBound(NamedTuple):
    nu: int
    cm_condition: bool


def connectivity_bound(m: int, n: int) -> ConnectivityBound:
    """nu = min(m, n, floor((m+n+1)/3)); chessboard complexes are
    homologically (nu-2)-connected, and Cohen-Macaulay iff
    min(m, n) <= floor((m+n+1)/3)."""
    if m < 1 or n < 1:
        raise DomainError("board sides must be at least 1")
    third = (m + n + 1) // 3
    return ConnectivityBound(min(m, n, third), min(m, n) <= third)
