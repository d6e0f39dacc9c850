"""Braid words and Garside left-greedy normal forms (classical structure).

Conventions, fixed once: a word is read top to bottom, so its first letter is
the crossing nearest the top of the braid diagram. Strands are indexed by
bottom endpoint, left to right. The induced permutation maps bottom positions
to top positions; on words it is the fold

    pi(l1 ... ln) = compose(...compose(compose(id, s_{l1}), s_{l2})..., s_{ln})

with compose(p, q)(x) = p(q(x)), so sigma1 sigma2 in B_3 induces the cycle
1 -> 2 -> 3 -> 1. Permutations are one-line tuples with 1-based values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BudgetExceededError, DomainError

Perm = tuple[int, ...]

DEFAULT_ENUM_BUDGET = 200_000


def identity_perm(k: int) -> Perm:
    return tuple(range(1, k + 1))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: compose(p, q)(x) = p(q(x))."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def half_twist(k: int) -> Perm:
    return tuple(range(k, 0, -1))


def transposition(k: int, i: int) -> Perm:
    out = list(range(1, k + 1))
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def left_descents(p: Perm) -> frozenset[int]:
    """{i : a permutation braid for p can start with sigma_i}."""
    inv = invert_perm(p)
    return frozenset(i for i in range(1, len(p)) if inv[i - 1] > inv[i])


def right_descents(p: Perm) -> frozenset[int]:
    """{i : a permutation braid for p can end with sigma_i}."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def perm_word_letters(p: Perm) -> tuple[int, ...]:
    """Generator indices of a positive word inducing p (length = inversions)."""
    k = len(p)
    out: list[int] = []
    cur = p
    while cur != identity_perm(k):
        s = min(left_descents(cur))
        out.append(s)
        cur = compose(transposition(k, s), cur)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators; letters are (index, sign) pairs."""

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strand_count < 0:
            raise DomainError("strand count must be non-negative")
        for idx, sign in self.letters:
            if sign not in (1, -1):
                raise DomainError(f"letter sign must be +1 or -1, got {sign}")
            if not 1 <= idx <= self.strand_count - 1:
                raise DomainError(
                    f"generator index {idx} out of range for {self.strand_count} strands"
                )

    def __str__(self) -> str:
        return " ".join(
            f"s{idx}" if sign > 0 else f"s{idx}'" for idx, sign in self.letters
        )

    @classmethod
    def parse(cls, text: str, strand_count: int) -> "BraidWord":
        letters = []
        for token in text.split():
            m = re.fullmatch(r"s(\d+)(')?", token)
            if not m:
                raise DomainError(f"bad braid letter {token!r}; expected like s1 or s2'")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        return cls(strand_count, tuple(letters))


def braid_mul(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strand_count != b.strand_count:
        raise DomainError("strand counts differ")
    return BraidWord(a.strand_count, a.letters + b.letters)


def braid_inv(a: BraidWord) -> BraidWord:
    return BraidWord(
        a.strand_count, tuple((i, -s) for i, s in reversed(a.letters))
    )


def induced_permutation(w: BraidWord) -> Perm:
    acc = identity_perm(w.strand_count)
    for idx, _ in w.letters:
        acc = compose(acc, transposition(w.strand_count, idx))
    return acc


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^infimum f_1 ... f_r with left-weighted permutation-braid factors.

    No factor is trivial or the half twist; adjacent factors x, y satisfy
    left_descents(y) <= right_descents(x).
    """

    strand_count: int
    infimum: int
    factors: tuple[Perm, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def __str__(self) -> str:
        parts = [f"D^{self.infimum}"]
        parts.extend(",".join(str(v) for v in f) for f in self.factors)
        return " | ".join(parts)


def _left_weight_pair(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    k = len(x)
    while True:
        movable = left_descents(y) - right_descents(x)
        if not movable:
            return x, y
        s = transposition(k, min(movable))
        x = compose(x, s)
        y = compose(s, y)


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """Left-greedy normal form; equal words get equal normal forms."""
    k = w.strand_count
    ident = identity_perm(k)
    w0 = half_twist(k)
    staged: list[tuple[Perm, int]] = []  # (factor, Delta power inserted before it)
    for idx, sign in w.letters:
        s = transposition(k, idx)
        if sign > 0:
            staged.append((s, 0))
        else:
            staged.append((compose(w0, s), -1))
    inf = 0
    factors: list[Perm] = []
    acc = 0
    for f, power in reversed(staged):
        if acc % 2:
            f = compose(compose(w0, f), w0)
        acc += power
        factors.append(f)
    inf = acc
    factors.reverse()
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        out: list[Perm] = []
        for f in factors:
            out.append(f)
            while len(out) >= 2:
                x, y = _left_weight_pair(out[-2], out[-1])
                if (x, y) == (out[-2], out[-1]):
                    break
                changed = True
                out[-2] = x
                if y == ident:
                    out.pop()
                else:
                    out[-1] = y
                    break
        factors = out
    while factors and factors[0] == w0:
        factors.pop(0)
        inf += 1
    return GarsideNormalForm(k, inf, tuple(factors))


def braid_eq(a: BraidWord, b: BraidWord) -> bool:
    if a.strand_count != b.strand_count:
        raise DomainError("strand counts differ")
    return normal_form(a) == normal_form(b)


@lru_cache(maxsize=None)
def _delta_letters(k: int) -> tuple[int, ...]:
    return perm_word_letters(half_twist(k))


def nf_to_word(nf: GarsideNormalForm) -> BraidWord:
    """A word representing the normal form (Delta powers, then the factors)."""
    k = nf.strand_count
    letters: list[tuple[int, int]] = []
    delta = _delta_letters(k)
    if nf.infimum >= 0:
        letters.extend((i, 1) for _ in range(nf.infimum) for i in delta)
    else:
        inv = [(i, -1) for i in reversed(delta)]
        letters.extend(l for _ in range(-nf.infimum) for l in inv)
    for f in nf.factors:
        letters.extend((i, 1) for i in perm_word_letters(f))
    return BraidWord(k, tuple(letters))


def strand_delete(w: BraidWord, s: int) -> BraidWord:
    """Delete the strand at bottom position s, tracking it geometrically.

    Walking the word bottom-up, a crossing at the tracked position is dropped
    (and the position updated); other crossings keep their index or shift
    down by one according to the side they are on.
    """
    k = w.strand_count
    if not 1 <= s <= k:
        raise DomainError(f"strand index {s} out of range for {k} strands")
    cur = s
    kept_reversed: list[tuple[int, int]] = []
    for idx, sign in reversed(w.letters):
        if idx == cur:
            cur = idx + 1
        elif idx + 1 == cur:
            cur = idx
        elif idx + 1 < cur:
            kept_reversed.append((idx, sign))
        else:
            kept_reversed.append((idx - 1, sign))
    return BraidWord(k - 1, tuple(reversed(kept_reversed)))


def _nonterminal_perms(k: int) -> list[Perm]:
    """All permutation-braid factors usable in a normal form (not id, not Delta)."""
    import itertools

    skip = {identity_perm(k), half_twist(k)}
    return [p for p in itertools.permutations(range(1, k + 1)) if p not in skip]


def enumerate_braids(
    k: int, L: int, budget: int = DEFAULT_ENUM_BUDGET
) -> list[GarsideNormalForm]:
    """All braids on k strands with |infimum| <= L and canonical length <= L.

    Deterministic order: by (infimum, canonical length, factors). Raises
    BudgetExceededError if more than `budget` braids would be produced.
    """
    if k < 1 or L < 0:
        raise DomainError("need k >= 1 and L >= 0")
    if k == 1:
        return [GarsideNormalForm(k, 0)]
    perms = sorted(_nonterminal_perms(k))
    succ: dict[Perm, list[Perm]] = {
        x: [y for y in perms if left_descents(y) <= right_descents(x)]
        for x in perms
    }
    # count left-weighted factor sequences of each length before materializing
    total_seqs = 1  # the empty sequence
    level = {x: 1 for x in perms}
    for _ in range(L):
        total_seqs += sum(level.values())
        if total_seqs * (2 * L + 1) > budget:
            break
        nxt: dict[Perm, int] = {}
        for x, c in level.items():
            for y in succ[x]:
                nxt[y] = nxt.get(y, 0) + c
        level = nxt
    total = total_seqs * (2 * L + 1)
    if total > budget:
        raise BudgetExceededError(
            f"enumeration would produce at least {total} braids, over the budget of {budget}"
        )
    seqs: list[tuple[Perm, ...]] = [()]

    def grow(seq: tuple[Perm, ...]) -> None:
        if len(seq) == L:
            return
        for y in (perms if not seq else succ[seq[-1]]):
            seqs.append(seq + (y,))
            grow(seq + (y,))

    grow(())
    out = [
        GarsideNormalForm(k, inf, seq)
        for inf in range(-L, L + 1)
        for seq in seqs
    ]
    out.sort(key=lambda nf: (nf.infimum, nf.canonical_length, nf.factors))
    return out
