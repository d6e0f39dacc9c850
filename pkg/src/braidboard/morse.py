"""Vertex height functions, descending links, and sublevel comparisons.

A height function assigns an integer to every vertex such that no cell has
two vertices of equal height; each cell then has a unique top vertex. The
main entry point, bb_verify, checks the standard local-to-global criterion:
if every vertex above the threshold has a homologically d-connected
descending link, the inclusion of the sublevel complex induces isomorphisms
on reduced homology through degree d and a surjection in degree d + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from .delta import DeltaComplex
from .errors import DomainError, InvalidHeightError
from .homology import (
    DegreeMapFacts,
    HomologyReport,
    induced_inclusion_maps,
    reduced_homology,
)


@dataclass(frozen=True)
class HeightFunction:
    """Integer heights on vertex ids."""

    values: tuple[tuple[str, int], ...]

    def __post_init__(self):
        seen = set()
        for v, h in self.values:
            if v in seen:
                raise DomainError(f"duplicate height for vertex {v!r}")
            seen.add(v)
            if not isinstance(h, int) or isinstance(h, bool):
                raise DomainError(f"height of {v!r} must be an integer")

    @classmethod
    def build(cls, mapping: Mapping[str, int]) -> "HeightFunction":
        return cls(tuple(sorted((str(v), h) for v, h in mapping.items())))

    def of(self, vertex: str) -> int:
        for v, h in self.values:
            if v == vertex:
                return h
        raise DomainError(f"no height assigned to vertex {vertex!r}")

    def as_dict(self) -> dict[str, int]:
        return dict(self.values)

    def validate_for(self, X: DeltaComplex) -> None:
        """Total on the vertices of X, injective on the vertices of each cell."""
        heights = self.as_dict()
        for v in X.cells_of_dim(0):
            if v not in heights:
                raise InvalidHeightError(f"vertex {v!r} has no height")
        for c in X.cell_ids:
            slots = X.vertex_slots(c)
            hs = [heights[v] for v in slots]
            if len(set(hs)) != len(hs):
                raise InvalidHeightError(
                    f"cell {c!r} has two vertices of equal height"
                )

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "HeightFunction":
        try:
            data = json.loads(text)
            items = {str(v): int(h) for v, h in data.items()}
        except (AttributeError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed height JSON: {exc}") from exc
        return cls.build(items)


def _pair_id(cell: str, slot: int) -> str:
    return f"{cell}@{slot}"


def descending_link(X: DeltaComplex, h: HeightFunction, vertex: str) -> DeltaComplex:
    """Link of `vertex` inside the cells whose top vertex it is.

    Cells of the link are (cell, slot) pairs with id "cell@slot", one for
    each cell of X in which `vertex` sits at `slot` and strictly dominates
    every other vertex; the pair has dimension dim(cell) - 1.
    """
    h.validate_for(X)
    if X.dim_of(vertex) != 0:
        raise DomainError(f"{vertex!r} is not a vertex")
    heights = h.as_dict()
    hv = heights[vertex]
    faces: dict[str, tuple[str, ...]] = {}
    for c in X.cell_ids:
        if X.dim_of(c) < 1:
            continue
        slots = X.vertex_slots(c)
        if vertex not in slots:
            continue
        if any(heights[u] >= hv for u in slots if u != vertex):
            continue
        s = slots.index(vertex)
        sub = []
        for j in range(len(slots)):
            if j == s:
                continue
            face = X.faces_of(c)[j]
            sub.append(_pair_id(face, s - 1 if j < s else s))
        faces[_pair_id(c, s)] = tuple(sub) if len(sub) > 1 else ()
    # dimension-0 pairs come from edges; their single remaining slot is the
    # opposite vertex, and the loop above already emitted () for them.
    return DeltaComplex(faces)


def sublevel_complex(X: DeltaComplex, h: HeightFunction, t: int) -> DeltaComplex:
    """Full subcomplex on the vertices of height at most t."""
    h.validate_for(X)
    heights = h.as_dict()
    return X.full_subcomplex(v for v in X.cells_of_dim(0) if heights[v] <= t)


@dataclass(frozen=True)
class MorseReport:
    """Outcome of the sublevel-inclusion criterion at one threshold."""

    verdict: str  # "pass" | "fail" | "inconclusive"
    threshold: int
    degree: int
    hypothesis_met: bool
    witness_vertex: Optional[str]
    witness_link: Optional[HomologyReport]
    maps: tuple[tuple[int, str, DegreeMapFacts], ...]  # (degree, expected, facts)
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "threshold": self.threshold,
            "degree": self.degree,
            "hypothesis_met": self.hypothesis_met,
            "witness": None
            if self.witness_vertex is None
            else {
                "vertex": self.witness_vertex,
                "descending_link": self.witness_link.to_json_dict(),
            },
            "maps": {
                str(i): {"expected": exp, "mono": f.mono, "epi": f.epi, "iso": f.iso}
                for i, exp, f in self.maps
            },
            "notes": list(self.notes),
        }


_NO_PREDICTION = "hypothesis not satisfied, no prediction"
_FALSIFIED = (
    "hypothesis satisfied but the sublevel inclusion disagrees with the"
    " prediction; this falsifies the implementation"
)


def bb_verify(X: DeltaComplex, h: HeightFunction, t: int, d: int) -> MorseReport:
    """Check the descending-link hypothesis at threshold t and compare.

    Hypothesis: every vertex above t has a homologically d-connected
    descending link. When it holds, the inclusion of the sublevel complex
    must be an isomorphism on reduced homology in degrees <= d and onto in
    degree d + 1; the verdict reports whether the computed maps agree.
    When it fails, the verdict is "inconclusive" with the first bad vertex.
    """
    if d < -1:
        raise DomainError("connectivity degree must be at least -1")
    h.validate_for(X)
    heights = h.as_dict()
    for v in sorted(X.cells_of_dim(0)):
        if heights[v] <= t:
            continue
        link = descending_link(X, h, v)
        rep = reduced_homology(link, max_degree=d)
        if not rep.connected_through(d):
            return MorseReport(
                verdict="inconclusive",
                threshold=t,
                degree=d,
                hypothesis_met=False,
                witness_vertex=v,
                witness_link=rep,
                maps=(),
                notes=(_NO_PREDICTION,),
            )
    sub = sublevel_complex(X, h, t)
    facts = induced_inclusion_maps(sub, X, d + 1)
    maps = []
    ok = True
    for i in range(-1, d + 2):
        expected = "iso" if i <= d else "epi"
        f = facts[i]
        maps.append((i, expected, f))
        ok = ok and (f.iso if expected == "iso" else f.epi)
    return MorseReport(
        verdict="pass" if ok else "fail",
        threshold=t,
        degree=d,
        hypothesis_met=True,
        witness_vertex=None,
        witness_link=None,
        maps=tuple(maps),
        notes=() if ok else (_FALSIFIED,),
    )
