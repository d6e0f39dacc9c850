"""Partial braids over a board, their complexes, and truncated fibers.

A partial braid connects a set S of bottom positions (rows, in [1..m]) to a
set T of top positions (columns, in [1..n]) through a braid; it is a cell of
dimension |S| - 1, and faces delete one strand at a time. A FrozenContext
pins extra strands that faces never delete; this is how links are expressed
as relative complexes over the remaining positions.

Modeling note: equality of relative cells is equality of the combined braid
(actives interleaved with frozen strands by bottom position) together with
the frozen data; distinct cells always differ in (S, T, normal form, frozen).

Braided complexes are infinite; everything here works on truncations whose
combined braids satisfy |infimum| <= L and canonical length <= L. L is part
of every truncation result so reports can echo it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .braid import (
    BraidWord,
    GarsideNormalForm,
    enumerate_braids,
    induced_permutation,
    nf_to_word,
    normal_form,
    perm_word_letters,
    strand_delete,
)
from .delta import DeltaComplex
from .errors import BudgetExceededError, DomainError

DEFAULT_CELL_BUDGET = 200_000


def _nf_id(nf: GarsideNormalForm) -> str:
    return f"D^{nf.infimum}" + "".join(
        "/" + ",".join(str(v) for v in f) for f in nf.factors
    )


@dataclass(frozen=True)
class FrozenContext:
    """Strands that belong to the surrounding cell and are never deleted."""

    pairs: tuple[tuple[int, int], ...]  # (bottom, top), sorted by bottom
    braid: GarsideNormalForm  # normal form of the frozen sub-braid

    def __post_init__(self):
        bottoms = [b for b, _ in self.pairs]
        tops = [t for _, t in self.pairs]
        if bottoms != sorted(set(bottoms)) or len(set(tops)) != len(tops):
            raise DomainError("frozen pairs must have distinct sorted bottoms and distinct tops")
        if self.braid.strand_count != len(self.pairs):
            raise DomainError("frozen braid strand count must match pair count")

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(b for b, _ in self.pairs)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.pairs)

    def fingerprint(self) -> str:
        if not self.pairs:
            return ""
        body = ";".join(f"{b}-{t}" for b, t in self.pairs)
        return f"@{body}:{_nf_id(self.braid)}"


EMPTY_CONTEXT = FrozenContext((), GarsideNormalForm(0, 0))


@dataclass(frozen=True)
class PartialBraid:
    """|S| strands from bottom positions S to top positions T, braided.

    `braid` is the normal form of the combined braid on the active and
    frozen strands together, ordered by bottom position.
    """

    m: int
    n: int
    bottoms: tuple[int, ...]
    tops: tuple[int, ...]
    braid: GarsideNormalForm
    frozen: FrozenContext = EMPTY_CONTEXT

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError("board sides must be at least 1")
        S, T = self.bottoms, self.tops
        if not S:
            raise DomainError("a partial braid needs at least one active strand")
        if list(S) != sorted(set(S)) or list(T) != sorted(set(T)):
            raise DomainError("bottom and top position sets must be sorted and distinct")
        if len(S) != len(T):
            raise DomainError("bottom and top position sets must have equal size")
        if S[0] < 1 or S[-1] > self.m or T[0] < 1 or T[-1] > self.n:
            raise DomainError("positions out of board range")
        if set(S) & set(self.frozen.bottoms) or set(T) & set(self.frozen.tops):
            raise DomainError("active positions collide with frozen strands")
        if any(b < 1 or b > self.m for b in self.frozen.bottoms) or any(
            t < 1 or t > self.n for t in self.frozen.tops
        ):
            raise DomainError("frozen positions out of board range")
        k = len(S) + len(self.frozen.pairs)
        if self.braid.strand_count != k:
            raise DomainError(
                f"combined braid has {self.braid.strand_count} strands, expected {k}"
            )
        perm = induced_permutation(nf_to_word(self.braid))
        bot_all = self._combined_bottoms()
        top_all = self._combined_tops()
        top_slot = {t: i for i, t in enumerate(top_all)}
        for b, t in self.frozen.pairs:
            if perm[bot_all.index(b)] != top_slot[t] + 1:
                raise DomainError(
                    f"combined braid sends frozen bottom {b} to the wrong top"
                )
        if self.frozen.pairs:
            word = nf_to_word(self.braid)
            for b in sorted(S, reverse=True):
                word = strand_delete(word, bot_all.index(b) + 1)
                bot_all = tuple(x for x in bot_all if x != b)
            if normal_form(word) != self.frozen.braid:
                raise DomainError(
                    "deleting the active strands does not recover the frozen braid"
                )

    def _combined_bottoms(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.bottoms) | set(self.frozen.bottoms)))

    def _combined_tops(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.tops) | set(self.frozen.tops)))

    @property
    def strand_count(self) -> int:
        return len(self.bottoms)

    @property
    def dim(self) -> int:
        return len(self.bottoms) - 1

    def cell_id(self) -> str:
        return (
            ",".join(str(b) for b in self.bottoms)
            + ">"
            + ",".join(str(t) for t in self.tops)
            + ":"
            + _nf_id(self.braid)
            + self.frozen.fingerprint()
        )

    def project(self) -> tuple[tuple[int, int], ...]:
        """The underlying matching {(S_i, T_pi(i))}, sorted by row."""
        perm = induced_permutation(nf_to_word(self.braid))
        bot_all = self._combined_bottoms()
        top_all = self._combined_tops()
        out = []
        for b in self.bottoms:
            t = top_all[perm[bot_all.index(b)] - 1]
            out.append((b, t))
        return tuple(out)

    def face(self, i: int) -> "PartialBraid":
        """Delete active strand i (0-based, by bottom position)."""
        if not 0 <= i < len(self.bottoms):
            raise DomainError(f"face index {i} out of range")
        b = self.bottoms[i]
        t = dict(self.project())[b]
        bot_all = self._combined_bottoms()
        word = strand_delete(nf_to_word(self.braid), bot_all.index(b) + 1)
        return PartialBraid(
            self.m,
            self.n,
            tuple(x for x in self.bottoms if x != b),
            tuple(x for x in self.tops if x != t),
            normal_form(word),
            self.frozen,
        )

    def faces(self) -> list["PartialBraid"]:
        """The k immediate faces, in slot order; empty for single strands."""
        if len(self.bottoms) == 1:
            return []
        return [self.face(i) for i in range(len(self.bottoms))]

    def link_context(self) -> FrozenContext:
        """Freeze every strand of this cell (on top of its own context)."""
        pairs = tuple(sorted(self.project() + self.frozen.pairs))
        return FrozenContext(pairs, self.braid)

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "n": self.n,
                "S": list(self.bottoms),
                "T": list(self.tops),
                "beta": str(nf_to_word(self.braid)),
                "frozen": [[b, t] for b, t in self.frozen.pairs],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "PartialBraid":
        try:
            data = json.loads(text)
            m, n = int(data["m"]), int(data["n"])
            S = tuple(sorted(int(x) for x in data["S"]))
            T = tuple(sorted(int(x) for x in data["T"]))
            pairs = tuple(sorted((int(b), int(t)) for b, t in data.get("frozen", [])))
            k = len(S) + len(pairs)
            word = BraidWord.parse(data["beta"], k)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed partial braid JSON: {exc}") from exc
        if pairs:
            bot_all = sorted(set(S) | {b for b, _ in pairs})
            sub = word
            for b in sorted(S, reverse=True):
                sub = strand_delete(sub, bot_all.index(b) + 1)
                bot_all.remove(b)
            frozen = FrozenContext(pairs, normal_form(sub))
        else:
            frozen = EMPTY_CONTEXT
        return cls(m, n, S, T, normal_form(word), frozen)


def straight_lift(
    m: int, n: int, tau: Iterable[tuple[int, int]]
) -> PartialBraid:
    """The positive permutation-braid lift of a matching (no frozen context)."""
    pairs = tuple(sorted((int(i), int(j)) for i, j in tau))
    _check_matching(m, n, pairs, EMPTY_CONTEXT)
    k = len(pairs)
    S = tuple(i for i, _ in pairs)
    T = tuple(sorted(j for _, j in pairs))
    top_slot = {t: i + 1 for i, t in enumerate(T)}
    perm = tuple(top_slot[j] for _, j in pairs)
    word = BraidWord(k, tuple((i, 1) for i in perm_word_letters(perm)))
    return PartialBraid(m, n, S, T, normal_form(word))


def _check_matching(
    m: int,
    n: int,
    pairs: Sequence[tuple[int, int]],
    context: FrozenContext,
) -> None:
    rows = [i for i, _ in pairs]
    cols = [j for _, j in pairs]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise DomainError("not a matching: repeated row or column")
    if pairs and (min(rows) < 1 or max(rows) > m or min(cols) < 1 or max(cols) > n):
        raise DomainError("matching position out of board range")
    if set(rows) & set(context.bottoms) or set(cols) & set(context.tops):
        raise DomainError("matching collides with frozen strands")


class TruncationResult(NamedTuple):
    complex: DeltaComplex
    L: int


def closure_complex(
    seeds: Iterable[PartialBraid], budget: int = DEFAULT_CELL_BUDGET
) -> DeltaComplex:
    """Smallest face-closed complex containing the seeds.

    Cells are deduplicated by canonical id (equal ids iff equal cells); the
    output is strict. Raises BudgetExceededError over `budget` cells.
    """
    seeds = list(seeds)
    if seeds:
        key = (seeds[0].m, seeds[0].n, seeds[0].frozen)
        for p in seeds:
            if (p.m, p.n, p.frozen) != key:
                raise DomainError("seeds must share board size and frozen context")
    cells: dict[str, tuple[str, ...]] = {}
    stack: list[PartialBraid] = list(seeds)
    known: set[str] = set()
    while stack:
        p = stack.pop()
        cid = p.cell_id()
        if cid in known:
            continue
        known.add(cid)
        if len(known) > budget:
            raise BudgetExceededError(
                f"closure exceeded the cell budget of {budget}"
            )
        fs = p.faces()
        cells[cid] = tuple(q.cell_id() for q in fs)
        stack.extend(fs)
    return DeltaComplex(cells)


_perm_cache: dict[tuple[int, GarsideNormalForm], tuple[int, ...]] = {}


def _nf_perm(nf: GarsideNormalForm) -> tuple[int, ...]:
    key = (nf.strand_count, nf)
    if key not in _perm_cache:
        _perm_cache[key] = induced_permutation(nf_to_word(nf))
    return _perm_cache[key]


def _lifts(
    m: int,
    n: int,
    sigma: tuple[tuple[int, int], ...],
    L: int,
    context: FrozenContext,
    budget: int,
) -> list[PartialBraid]:
    """All window-L partial braids projecting exactly onto the matching sigma."""
    S = tuple(i for i, _ in sigma)
    T = tuple(sorted(j for _, j in sigma))
    bot_all = tuple(sorted(set(S) | set(context.bottoms)))
    top_all = tuple(sorted(set(T) | set(context.tops)))
    top_slot = {t: i + 1 for i, t in enumerate(top_all)}
    want = [0] * len(bot_all)
    for i, j in sigma + context.pairs:
        want[bot_all.index(i)] = top_slot[j]
    want_perm = tuple(want)
    out = []
    for nf in enumerate_braids(len(bot_all), L, budget):
        if _nf_perm(nf) != want_perm:
            continue
        if context.pairs:
            word = nf_to_word(nf)
            rest = list(bot_all)
            for b in sorted(S, reverse=True):
                word = strand_delete(word, rest.index(b) + 1)
                rest.remove(b)
            if normal_form(word) != context.braid:
                continue
        out.append(PartialBraid(m, n, S, T, nf, context))
    return out


def truncated_fiber(
    m: int,
    n: int,
    tau: Iterable[tuple[int, int]],
    L: int,
    context: FrozenContext = EMPTY_CONTEXT,
    budget: int = DEFAULT_CELL_BUDGET,
) -> TruncationResult:
    """Face closure of the window-L part of the closed fiber over tau.

    Contains every partial braid whose projection is a sub-matching of tau
    and whose combined braid lies in the |inf|, length <= L window, plus the
    faces needed to close the set (a face of a window braid can leave the
    window, so closure may add cells just outside it).
    """
    pairs = tuple(sorted((int(i), int(j)) for i, j in tau))
    _check_matching(m, n, pairs, context)
    if L < 0:
        raise DomainError("truncation parameter must be non-negative")
    seeds: list[PartialBraid] = []
    for size in range(1, len(pairs) + 1):
        for sub in itertools.combinations(pairs, size):
            seeds.extend(_lifts(m, n, sub, L, context, budget))
    return TruncationResult(closure_complex(seeds, budget), L)


def truncated_braided_complex(
    m: int,
    n: int,
    L: int,
    context: FrozenContext = EMPTY_CONTEXT,
    budget: int = DEFAULT_CELL_BUDGET,
) -> TruncationResult:
    """Window-L truncation of the whole braided board complex, face-closed."""
    if L < 0:
        raise DomainError("truncation parameter must be non-negative")
    free_rows = [i for i in range(1, m + 1) if i not in context.bottoms]
    free_cols = [j for j in range(1, n + 1) if j not in context.tops]
    seeds: list[PartialBraid] = []
    top = min(len(free_rows), len(free_cols))
    for k in range(1, top + 1):
        for rows in itertools.combinations(free_rows, k):
            for cols in itertools.permutations(free_cols, k):
                sigma = tuple(sorted(zip(rows, cols)))
                seeds.extend(_lifts(m, n, sigma, L, context, budget))
    return TruncationResult(closure_complex(seeds, budget), L)
