"""Isomorphism search between finite relational structures.

A structure is a carrier ``range(n)``, an invariant colour per element and a
list of functional facts ``(relation, args, result)``.  A bijection is an
isomorphism when it preserves colours and carries facts onto facts.  Forced
values are propagated through facts before branching.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field


@dataclass
class Structure:
    colors: list
    facts: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.colors)

    def add(self, rel, args, result) -> None:
        self.facts.append((rel, tuple(args), result))


def find_isomorphism(A: Structure, B: Structure, budget: int = 2_000_000):
    """A bijection (list) from A's carrier to B's, or None.

    Raises ``RuntimeError`` when the branching budget is exhausted.
    """
    n = A.n
    if n != B.n or Counter(A.colors) != Counter(B.colors):
        return None
    if Counter(r for r, _, _ in A.facts) != Counter(r for r, _, _ in B.facts):
        return None
    lookup = {}
    for r, args, res in B.facts:
        lookup[(r, args)] = res
    involving = defaultdict(list)
    nullary = []
    for fid, (r, args, res) in enumerate(A.facts):
        if not args:
            nullary.append(fid)
        for x in set(args):
            involving[x].append(fid)
    f = [-1] * n
    g = [-1] * n
    by_color = defaultdict(list)
    for y, c in enumerate(B.colors):
        by_color[c].append(y)

    def assign(pairs, trail) -> bool:
        stack = list(pairs)
        while stack:
            x, y = stack.pop()
            if f[x] >= 0:
                if f[x] != y:
                    return False
                continue
            if g[y] >= 0 or A.colors[x] != B.colors[y]:
                return False
            f[x], g[y] = y, x
            trail.append(x)
            for fid in involving[x]:
                r, args, res = A.facts[fid]
                image = []
                for a in args:
                    if f[a] < 0:
                        break
                    image.append(f[a])
                else:
                    v = lookup.get((r, tuple(image)))
                    if v is None:
                        return False
                    if f[res] >= 0:
                        if f[res] != v:
                            return False
                    else:
                        stack.append((res, v))
        return True

    def undo(trail):
        for x in trail:
            g[f[x]] = -1
            f[x] = -1

    start = []
    for fid in nullary:
        r, args, res = A.facts[fid]
        v = lookup.get((r, ()))
        if v is None:
            return None
        start.append((res, v))
    trail0 = []
    if not assign(start, trail0):
        return None

    steps = [0]

    def search() -> bool:
        free = [x for x in range(n) if f[x] < 0]
        if not free:
            return True
        x = min(free, key=lambda z: (len(by_color[A.colors[z]]), z))
        for y in by_color[A.colors[x]]:
            if g[y] >= 0:
                continue
            steps[0] += 1
            if steps[0] > budget:
                raise RuntimeError("isomorphism search budget exhausted")
            trail = []
            if assign([(x, y)], trail) and search():
                return True
            undo(trail)
        return False

    return list(f) if search() else None
