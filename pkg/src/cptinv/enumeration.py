"""Exhaustive enumeration of small monoids up to isomorphism.

Two independent generators: a Cayley-table search with canonical-form
deduplication, and a generator that glues semilattices of abelian groups.
"""

from __future__ import annotations

from itertools import product

from .errors import Refused
from .finalg import (FinMonoid, FinSemilattice, abelian_group, canonical_form, is_homomorphism,
                     is_inverse, monoid_isomorphic, _profile)
from .jarek import AbGroupDiagram, jarek_compose

DEFAULT_BOUND = 6
CLASSES = ("monoid", "inverse", "commutative-inverse")


def _check_bound(n: int, bound: int) -> None:
    if n < 1:
        raise Refused(f"order must be positive, got {n}")
    if n > bound:
        raise Refused(f"order {n} exceeds the enumeration bound {bound}")


def _tables(n: int, commutative: bool = False, idempotent: bool = False, inverse: bool = False):
    """Yield every associative n×n table with unit 0, as a list of rows.

    The table is filled cell by cell, diagonal first; each triple is checked
    as soon as the four entries it involves are known.  Only labellings with
    the idempotents before the other non-unit elements are produced, which
    loses no isomorphism class.  With ``inverse`` set, idempotents must
    commute (true in every inverse monoid).
    """
    U = -1
    t = [[U] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x
    if idempotent:
        for x in range(1, n):
            t[x][x] = x
    cells = [(a, a) for a in range(1, n) if t[a][a] == U]
    cells += [(a, b) for a in range(1, n) for b in range(1, n)
              if a != b and t[a][b] == U and (not commutative or a < b)]
    rng = range(n)

    def assoc_ok(a: int, b: int) -> bool:
        v = t[a][b]
        ra = t[a]
        for z in rng:  # (ab)z = a(bz)
            vz, bz = t[v][z], t[b][z]
            if vz != U and bz != U:
                w = ra[bz]
                if w != U and w != vz:
                    return False
        for x in rng:  # (xa)b = x(ab)
            xv, xa = t[x][v], t[x][a]
            if xv != U and xa != U:
                w = t[xa][b]
                if w != U and w != xv:
                    return False
        for x in rng:
            tx = t[x]
            for y in rng:
                if tx[y] == a:  # (xy)b = x(yb)
                    yb = t[y][b]
                    if yb != U:
                        w = tx[yb]
                        if w != U and w != v:
                            return False
                if t[y][x] == b:  # a(yx) = (ay)x
                    ay = ra[y]
                    if ay != U:
                        w = t[ay][x]
                        if w != U and w != v:
                            return False
        return True

    def search(i: int):
        if i == len(cells):
            yield [row[:] for row in t]
            return
        a, b = cells[i]
        for v in rng:
            if a == b and a > 1 and (v == a) and t[a - 1][a - 1] != a - 1:
                continue  # an idempotent after a non-idempotent
            if inverse and not commutative and a != b and t[a][a] == a and t[b][b] == b:
                ba = t[b][a]
                if ba != U and ba != v:
                    continue
            t[a][b] = v
            if commutative:
                t[b][a] = v
            if assoc_ok(a, b) and (not commutative or a == b or assoc_ok(b, a)):
                yield from search(i + 1)
        t[a][b] = U
        if commutative:
            t[b][a] = U

    yield from search(0)


def _from_canonical(cf: tuple) -> FinMonoid:
    n, _keys, flat = cf
    return FinMonoid(tuple(range(n)), 0, [flat[a * n:(a + 1) * n] for a in range(n)])


def _dedupe_tables(n: int, tables, keep=None) -> list:
    seen = set()
    for rows in tables:
        M = FinMonoid(tuple(range(n)), 0, rows)
        if keep is None or keep(M):
            seen.add(canonical_form(M))
    return [_from_canonical(cf) for cf in sorted(seen)]


def enumerate_monoids(n: int, cls: str = "monoid", bound: int = DEFAULT_BOUND) -> list:
    """All monoids of order n in the class, one per isomorphism class, ordered
    by canonical form. Each result is the canonical representative."""
    if cls not in CLASSES:
        raise Refused(f"unknown class {cls!r}; expected one of {CLASSES}")
    _check_bound(n, bound)
    tables = _tables(n, commutative=cls == "commutative-inverse", inverse=cls != "monoid")
    return _dedupe_tables(n, tables, None if cls == "monoid" else is_inverse)


def enumerate_semilattices(n: int, bound: int = DEFAULT_BOUND) -> list:
    _check_bound(n, bound)
    return [FinSemilattice(M) for M in _dedupe_tables(n, _tables(n, commutative=True, idempotent=True))]


def _abelian_groups(m: int) -> list:
    """Abelian groups of order m up to isomorphism, as products of cyclic
    prime-power factors."""
    factors = []
    k, p = m, 2
    while k > 1:
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        if e:
            factors.append((p, e))
        p += 1
    choices = [[tuple(p ** part for part in lam) for lam in _partitions(e)] for p, e in factors]
    groups = []
    for combo in product(*choices):
        orders = tuple(o for c in combo for o in c)
        groups.append(abelian_group(*orders) if orders else abelian_group(1))
    return groups


def _partitions(e: int, largest: int | None = None) -> list:
    largest = e if largest is None else largest
    if e == 0:
        return [()]
    out = []
    for k in range(min(e, largest), 0, -1):
        out.extend((k,) + rest for rest in _partitions(e - k, k))
    return out


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _homomorphisms(G: FinMonoid, H: FinMonoid) -> list:
    return [m for m in product(range(H.n), repeat=G.n)
            if m[G.unit] == H.unit and is_homomorphism(m, G, H)]


def _diagrams(S: FinSemilattice, fibers: tuple):
    """Every functorial choice of restriction homomorphisms over S."""
    pairs = sorted((s, t) for s, t in S.order if s != t)
    base = {(s, s): tuple(range(fibers[s].n)) for s in range(S.n)}
    options = [_homomorphisms(fibers[t], fibers[s]) for s, t in pairs]
    chosen = dict(base)

    def functorial(s: int, t: int) -> bool:
        # every triple r ≤ s' ≤ t' whose three maps are now known
        for r, u, w in product(range(S.n), repeat=3):
            if not (S.leq(r, u) and S.leq(u, w)) or (s, t) not in ((r, u), (u, w), (r, w)):
                continue
            ru, uw, rw = chosen.get((r, u)), chosen.get((u, w)), chosen.get((r, w))
            if ru is None or uw is None or rw is None:
                continue
            if any(ru[uw[x]] != rw[x] for x in range(fibers[w].n)):
                return False
        return True

    def search(i: int):
        if i == len(pairs):
            yield AbGroupDiagram(S, fibers, dict(chosen))
            return
        key = pairs[i]
        for m in options[i]:
            chosen[key] = m
            if functorial(*key):
                yield from search(i + 1)
        del chosen[key]

    yield from search(0)


def _isomorphism_classes(monoids) -> list:
    """Keep the first monoid of each isomorphism class, checked pairwise by
    monoid_isomorphic within buckets of equal element profiles."""
    buckets: dict = {}
    kept = []
    for M in monoids:
        key = tuple(sorted(_profile(M, x) for x in range(M.n)))
        bucket = buckets.setdefault(key, [])
        if any(monoid_isomorphic(M, N) for N in bucket):
            continue
        bucket.append(M)
        kept.append(M)
    return kept


def enumerate_via_jarek(n: int, bound: int = DEFAULT_BOUND) -> list:
    """Commutative inverse monoids of order n, glued from semilattices of
    abelian groups, one per isomorphism class."""
    _check_bound(n, bound)
    groups = {m: _abelian_groups(m) for m in range(1, n + 1)}

    def composed():
        for k in range(1, n + 1):
            for S in enumerate_semilattices(k, bound):
                for sizes in _compositions(n, k):
                    for fibers in product(*(groups[m] for m in sizes)):
                        for D in _diagrams(S, tuple(fibers)):
                            yield jarek_compose(D).base

    return _isomorphism_classes(composed())
