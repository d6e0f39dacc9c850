"""Cohen-Macaulay verification for complexes and posets, plus the fiber
criterion for poset maps.

All three checks certify the homological weakening of Cohen-Macaulayness:
sphericity is tested on reduced integer homology, not on homotopy groups.
Every report carries the same fixed caveat string saying so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .delta import DeltaComplex, order_complex, simplicial_delta
from .errors import DomainError
from .homology import HomologyReport, reduced_homology
from .poset import Poset, open_interval, poset_neighborhood

CM_CAVEAT = (
    "homology-level check: sphericity is certified on reduced integer "
    "homology, not homotopy; homotopy Cohen-Macaulayness is not certified"
)


@dataclass(frozen=True)
class Witness:
    """First failing piece of a CM check, with its homology."""

    kind: str  # whole | link | boundary | interval | fiber | conclusion
    subject: tuple[str, ...]
    expected_dim: int
    homology: Optional[HomologyReport]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "subject": list(self.subject),
            "expected_dim": self.expected_dim,
            "homology": None if self.homology is None else self.homology.to_json_dict(),
        }


@dataclass(frozen=True)
class CMReport:
    verdict: str  # pass | fail
    dimension: int
    homology: HomologyReport
    witness: Optional[Witness]
    caveat: str = CM_CAVEAT

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "dimension": self.dimension,
            "betti": self.homology.to_json_dict()["betti"],
            "torsion": self.homology.to_json_dict()["torsion"],
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "caveat": self.caveat,
        }


def _spherical(X: DeltaComplex, d: int) -> tuple[bool, HomologyReport]:
    rep = reduced_homology(X)
    return rep.spherical_of(d), rep


def _simplicial_link(X: DeltaComplex, cell: str) -> DeltaComplex:
    """Link of a cell in a simplicial complex, on vertex sets."""
    base = set(X.vertex_slots(cell))
    cells = []
    for c in X.cell_ids:
        slots = X.vertex_slots(c)
        if base < set(slots):
            cells.append(tuple(v for v in slots if v not in base))
    return simplicial_delta(cells)


def _poset_link(X: DeltaComplex, cell: str) -> DeltaComplex:
    """Order complex of the strict cofaces; barycentric model of the link."""
    P = X.cell_poset()
    return order_complex(poset_neighborhood(P, cell, "link"))


def cm_check(X: DeltaComplex, method: str = "auto", jobs: int = 1) -> CMReport:
    """Homological Cohen-Macaulayness of a strict Delta-complex.

    Pass iff X is homologically spherical of dim(X) and the link of every
    cell is homologically spherical of the complementary dimension. Links of
    simplicial complexes are taken on vertex sets; otherwise they are
    realized as order complexes inside the cell poset (method="auto" picks;
    "simplicial" / "poset" force a route). The witness is the
    lexicographically least failing cell regardless of jobs.
    """
    if not X.is_strict():
        raise DomainError(
            "cm_check needs a strict complex; run poset_cm_check on "
            "cell_poset(X) (the barycentric subdivision) instead"
        )
    if method == "auto":
        method = "simplicial" if X.is_simplicial() else "poset"
    if method == "simplicial" and not X.is_simplicial():
        raise DomainError("simplicial link route needs a simplicial complex")
    if method not in ("simplicial", "poset"):
        raise DomainError(f"unknown link method {method!r}")
    d = X.dim
    ok, rep = _spherical(X, d)
    if not ok:
        return CMReport("fail", d, rep, Witness("whole", (), d, rep))
    link_of = _simplicial_link if method == "simplicial" else _poset_link
    for c in sorted(X.cell_ids):
        expected = d - X.dim_of(c) - 1
        link = link_of(X, c)
        ok, lrep = _spherical(link, expected)
        if not ok:
            return CMReport("fail", d, rep, Witness("link", (c,), expected, lrep))
    return CMReport("pass", d, rep, None)


def poset_cm_check(P: Poset) -> CMReport:
    """Homological Cohen-Macaulayness of a poset.

    Pass iff the order complex is homologically spherical of dim(P) and, for
    every element, its strict up-set (link) and strict down-set (boundary)
    are spherical of the forced dimensions, as is every open interval.
    """
    d = P.dim
    whole = order_complex(P)
    ok, rep = _spherical(whole, d)
    if not ok:
        return CMReport("fail", d, rep, Witness("whole", (), d, rep))
    for p in P.elements:
        h = P.height(p)
        bd = order_complex(poset_neighborhood(P, p, "boundary"))
        ok, brep = _spherical(bd, h - 1)
        if not ok:
            return CMReport("fail", d, rep, Witness("boundary", (p,), h - 1, brep))
        lk = order_complex(poset_neighborhood(P, p, "link"))
        ok, lrep = _spherical(lk, d - h - 1)
        if not ok:
            return CMReport("fail", d, rep, Witness("link", (p,), d - h - 1, lrep))
    for p in P.elements:
        for q in P.elements:
            if p != q and P.leq(p, q):
                expected = P.height(q) - P.height(p) - 2
                mid = order_complex(open_interval(P, p, q))
                ok, irep = _spherical(mid, expected)
                if not ok:
                    return CMReport(
                        "fail", d, rep, Witness("interval", (p, q), expected, irep)
                    )
    return CMReport("pass", d, rep, None)


@dataclass(frozen=True)
class QuillenReport:
    verdict: str  # pass | fail
    dimension: int
    fibers_checked: int
    witness: Optional[Witness]
    notes: tuple[str, ...] = ()
    caveat: str = CM_CAVEAT

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "dimension": self.dimension,
            "fibers_checked": self.fibers_checked,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "notes": list(self.notes),
            "caveat": self.caveat,
        }


_FIBER_NOTE = (
    "fiber over y is required to be Cohen-Macaulay of dimension height(y)"
)


def quillen_fiber_check(
    P: Poset, Q: Poset, f: Mapping[str, str]
) -> QuillenReport:
    """Fiber criterion for a strictly increasing poset map f: P -> Q.

    Checks that Q is homologically CM of some dimension d and that for every
    y in Q the preimage of closure(y) is homologically CM of dimension
    height(y); on success the conclusion (P homologically CM of dimension d)
    is verified directly, and a mismatch is flagged as a hard failure since
    it would falsify this implementation rather than the criterion.
    """
    for p in P.elements:
        if p not in f:
            raise DomainError(f"map is undefined on element {p!r}")
        if f[p] not in Q.elements:
            raise DomainError(f"image {f[p]!r} of {p!r} is not in the codomain")
    for p in P.elements:
        for p2 in P.upper_covers(p):
            if not (Q.leq(f[p], f[p2]) and f[p] != f[p2]):
                raise DomainError(
                    f"map is not strictly increasing on cover pair ({p!r}, {p2!r})"
                )
    notes = (_FIBER_NOTE,)
    qrep = poset_cm_check(Q)
    if not qrep.passed:
        return QuillenReport("fail", Q.dim, 0, qrep.witness, notes)
    d = Q.dim
    checked = 0
    for y in Q.elements:
        fiber_elements = [p for p in P.elements if Q.leq(f[p], y)]
        fiber = P.induced(fiber_elements)
        frep = poset_cm_check(fiber)
        checked += 1
        expected = Q.height(y)
        if not frep.passed or fiber.dim != expected:
            hom = frep.homology if frep.witness is None else frep.witness.homology
            return QuillenReport(
                "fail", d, checked, Witness("fiber", (y,), expected, hom), notes
            )
    prep = poset_cm_check(P)
    if not prep.passed or P.dim != d:
        return QuillenReport(
            "fail",
            d,
            checked,
            Witness("conclusion", (), d, prep.homology),
            notes
            + (
                "criterion passed but the direct check of the domain "
                "disagrees; this falsifies the implementation",
            ),
        )
    return QuillenReport("pass", d, checked, None, notes)
