"""Heuristic fundamental-group trivializer.

Builds the spanning-tree presentation of pi_1 of the 2-skeleton and runs a
bounded Tietze simplification. Answers "pass" only when every generator is
eliminated within the step budget; otherwise "inconclusive". Never "fail":
an inconclusive answer carries no information about the group.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Optional

from .delta import DeltaComplex
from .errors import DomainError

DEFAULT_TIETZE_BUDGET = 10_000


def _reduce(word: list[int]) -> list[int]:
    """Free + cyclic reduction of a relator."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
        reduced: list[int] = []
        for x in out:
            if reduced and reduced[-1] == -x:
                reduced.pop()
            else:
                reduced.append(x)
        out = reduced
    return out


def _invert(word: list[int]) -> list[int]:
    return [-x for x in reversed(word)]


def _substitute(word: list[int], g: int, repl: list[int]) -> list[int]:
    out: list[int] = []
    inv = _invert(repl)
    for x in word:
        if x == g:
            out.extend(repl)
        elif x == -g:
            out.extend(inv)
        else:
            out.append(x)
    return out


def _presentation(X: DeltaComplex) -> tuple[set[int], list[list[int]]]:
    """Generators (non-tree edges) and relators (2-cell boundaries)."""
    verts = sorted(X.cells_of_dim(0))
    # an edge runs from its 1st face (tail) to its 0th face (head)
    arcs = [(X.faces_of(e)[1], X.faces_of(e)[0], e) for e in sorted(X.cells_of_dim(1))]
    adjacency: dict[str, list[tuple[str, str]]] = {v: [] for v in verts}
    for tail, head, e in arcs:
        adjacency[tail].append((head, e))
        adjacency[head].append((tail, e))
    seen = {verts[0]}
    tree: set[str] = set()
    queue = deque([verts[0]])
    while queue:
        v = queue.popleft()
        for w, e in adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    if len(seen) != len(verts):
        raise DomainError("complex is disconnected")
    gen_of = {
        e: k + 1
        for k, (_, _, e) in enumerate(a for a in arcs if a[2] not in tree)
    }
    relators: list[list[int]] = []
    for c in sorted(X.cells_of_dim(2)):
        f0, f1, f2 = X.faces_of(c)
        word: list[int] = []
        for e, sign in ((f2, 1), (f0, 1), (f1, -1)):
            if e in gen_of:
                word.append(sign * gen_of[e])
        relators.append(word)
    return set(gen_of.values()), relators


def fundamental_group_trivial(
    X: DeltaComplex, budget: int = DEFAULT_TIETZE_BUDGET
) -> str:
    """"pass" iff the spanning-tree presentation trivializes within budget."""
    if X.is_empty():
        raise DomainError("fundamental group needs a non-empty complex")
    alive, relators = _presentation(X)
    steps = 0
    while steps < budget:
        cleaned: list[list[int]] = []
        for r in relators:
            rr = _reduce(r)
            steps += 1
            if rr:
                cleaned.append(rr)
        relators = cleaned
        if not alive:
            return "pass"
        target: Optional[tuple[list[int], int]] = None
        for r in relators:
            if len(r) == 1:
                target = (r, abs(r[0]))
                break
            if len(r) == 2 and abs(r[0]) != abs(r[1]) and target is None:
                target = (r, abs(r[1]))
        if target is None:
            # cheapest generator occurring exactly once in some relator
            best = None
            for idx, r in enumerate(relators):
                counts = Counter(abs(x) for x in r)
                for g, cnt in sorted(counts.items()):
                    if cnt != 1:
                        continue
                    elsewhere = sum(
                        sum(1 for x in r2 if abs(x) == g)
                        for j, r2 in enumerate(relators)
                        if j != idx
                    )
                    key = ((len(r) - 1) * elsewhere, len(r), g, idx)
                    if best is None or key < best[0]:
                        best = (key, idx, g)
            if best is None:
                return "inconclusive"
            _, idx, g = best
            r = relators[idx]
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            rotated = r[pos:] + r[:pos]
            repl = _invert(rotated[1:]) if rotated[0] > 0 else rotated[1:]
            relators = [
                _substitute(r2, g, repl) for j, r2 in enumerate(relators) if j != idx
            ]
            alive.discard(g)
            steps += max(1, len(relators))
            continue
        r, g = target
        if len(r) == 1:
            repl: list[int] = []
        else:
            # r = x y with distinct generators; solve for y = |g|
            x, y = r
            repl = [-x] if y > 0 else [x]
        relators = [_substitute(r2, g, repl) for r2 in relators if r2 is not r]
        alive.discard(g)
        steps += max(1, len(relators))
    return "inconclusive"
