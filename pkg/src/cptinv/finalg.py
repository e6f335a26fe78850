"""Finite monoids given by Cayley tables, inverse monoids and semilattices.

Elements are always referred to by index; ``elements`` only carries labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Hashable, Iterable, Sequence

from .errors import Refused, StructureError, Verdict


def _freeze(table) -> tuple:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class FinMonoid:
    elements: tuple
    unit: int
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "table", _freeze(self.table))
        n = len(self.elements)
        if n == 0:
            raise StructureError("a monoid needs at least its unit")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise StructureError(f"table must be {n}x{n}")
        if not 0 <= self.unit < n:
            raise StructureError(f"unit index {self.unit} out of range")
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise StructureError(f"table[{i}][{j}] = {v} out of range")

    @property
    def n(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        acc = self.unit
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def index(self, label) -> int:
        return self.elements.index(label)

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a))

    @cached_property
    def idempotents(self) -> tuple:
        return tuple(x for x in range(self.n) if self.table[x][x] == x)

    def relabel(self, order: Sequence[int]) -> "FinMonoid":
        """New monoid whose i-th element is old element ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise StructureError("relabel order must be a permutation")
        table = [[pos[self.table[a][b]] for b in order] for a in order]
        return FinMonoid(tuple(self.elements[o] for o in order), pos[self.unit], table)

    def submonoid(self, carrier: Sequence[int]) -> "FinMonoid":
        carrier = list(carrier)
        pos = {x: i for i, x in enumerate(carrier)}
        if self.unit not in pos:
            raise Refused("carrier does not contain the unit", self.unit)
        table = []
        for a in carrier:
            row = []
            for b in carrier:
                ab = self.table[a][b]
                if ab not in pos:
                    raise Refused("carrier is not closed under the product", (a, b))
                row.append(pos[ab])
            table.append(row)
        return FinMonoid(tuple(self.elements[x] for x in carrier), pos[self.unit], table)

    @classmethod
    def from_operation(cls, elements: Iterable[Hashable], op: Callable, unit) -> "FinMonoid":
        elements = tuple(elements)
        pos = {x: i for i, x in enumerate(elements)}
        table = [[pos[op(a, b)] for b in elements] for a in elements]
        return cls(elements, pos[unit], table)


@dataclass(frozen=True)
class InverseStructure:
    base: FinMonoid
    dagger: tuple

    def __post_init__(self):
        object.__setattr__(self, "dagger", tuple(int(d) for d in self.dagger))
        if len(self.dagger) != self.base.n or any(not 0 <= d < self.base.n for d in self.dagger):
            raise StructureError("dagger must map every element to an element")

    def dag(self, x: int) -> int:
        return self.dagger[x]


@dataclass(frozen=True)
class FinSemilattice:
    """A commutative idempotent monoid read as a meet-semilattice with top = unit.

    ``carrier`` optionally records which elements of an ambient monoid these are.
    """

    base: FinMonoid
    carrier: tuple | None = None

    def __post_init__(self):
        problems = validate_semilattice(self.base)
        if problems:
            raise Refused("not a semilattice: " + problems[0], problems)

    @property
    def top(self) -> int:
        return self.base.unit

    @property
    def n(self) -> int:
        return self.base.n

    def meet(self, s: int, t: int) -> int:
        return self.base.table[s][t]

    def leq(self, s: int, t: int) -> bool:
        return self.base.table[s][t] == s

    @cached_property
    def order(self) -> frozenset:
        return frozenset((s, t) for s in range(self.n) for t in range(self.n) if self.leq(s, t))


def validate_monoid(M: FinMonoid) -> list[str]:
    """Every violated unit or associativity instance; empty iff ``M`` is a monoid."""
    t, u, n = M.table, M.unit, M.n
    report = []
    for i in range(n):
        if t[u][i] != i:
            report.append(f"unit law: {u}*{i} = {t[u][i]} != {i}")
        if t[i][u] != i:
            report.append(f"unit law: {i}*{u} = {t[i][u]} != {i}")
    for i, j, k in product(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            report.append(f"associativity: ({i}*{j})*{k} != {i}*({j}*{k})")
    return report


def validate_semilattice(M: FinMonoid) -> list[str]:
    report = validate_monoid(M)
    t = M.table
    for x in range(M.n):
        if t[x][x] != x:
            report.append(f"idempotence: {x}*{x} != {x}")
    for x in range(M.n):
        for y in range(x):
            if t[x][y] != t[y][x]:
                report.append(f"commutativity: {x}*{y} != {y}*{x}")
    return report


def pseudo_inverses(M: FinMonoid, x: int) -> list[int]:
    t = M.table
    return [y for y in range(M.n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]


def inverse_structure(M: FinMonoid) -> InverseStructure:
    """The dagger of an inverse monoid, found by exhaustive search.

    Raises ``Refused`` with the first element having zero or several
    pseudo-inverses.
    """
    dagger = []
    for x in range(M.n):
        ys = pseudo_inverses(M, x)
        if len(ys) != 1:
            what = "no pseudo-inverse" if not ys else f"pseudo-inverses {ys}"
            raise Refused(f"element {x} ({M.elements[x]!r}) has {what}", x)
        dagger.append(ys[0])
    return InverseStructure(M, tuple(dagger))


def is_inverse(M: FinMonoid) -> bool:
    try:
        inverse_structure(M)
    except Refused:
        return False
    return True


def validate_inverse(I: InverseStructure) -> list[str]:
    M, d = I.base, I.dagger
    report = []
    for x in range(M.n):
        if M.prod(x, d[x], x) != x:
            report.append(f"x != x x† x at {x}")
        if M.prod(d[x], x, d[x]) != d[x]:
            report.append(f"x† != x† x x† at {x}")
        if pseudo_inverses(M, x) != [d[x]]:
            report.append(f"pseudo-inverse of {x} is not unique")
    for x in range(M.n):
        for y in range(M.n):
            e, f = M.mul(x, d[x]), M.mul(y, d[y])
            if M.mul(e, f) != M.mul(f, e):
                report.append(f"idempotents {e} and {f} do not commute")
    return report


def idempotent_semilattice(I: InverseStructure) -> FinSemilattice:
    """Idempotents s = ss† with meet = product and top = unit."""
    M = I.base
    if not M.is_commutative:
        raise Refused("idempotent semilattice needs a commutative monoid; use ordgpd.esn_forward")
    carrier = tuple(s for s in range(M.n) if M.mul(s, I.dagger[s]) == s)
    return FinSemilattice(M.submonoid(carrier), carrier)


def natural_order(I: InverseStructure) -> frozenset:
    """Pairs (x, y) with x <= y, meaning x = y x† x."""
    M, d = I.base, I.dagger
    return frozenset(
        (x, y) for x in range(M.n) for y in range(M.n) if M.prod(y, d[x], x) == x
    )


def is_homomorphism(f: Sequence[int], M: FinMonoid, N: FinMonoid) -> Verdict:
    if len(f) != M.n or any(not 0 <= v < N.n for v in f):
        raise StructureError("map does not send every element into the target")
    if f[M.unit] != N.unit:
        return Verdict(False, ("unit", M.unit))
    for a in range(M.n):
        for b in range(M.n):
            if f[M.mul(a, b)] != N.mul(f[a], f[b]):
                return Verdict(False, (a, b))
    return Verdict(True)


def power_profile(M: FinMonoid, x: int) -> tuple:
    """(index, period) of the cyclic subsemigroup generated by x."""
    seen = {}
    p, k = x, 1
    while p not in seen:
        seen[p] = k
        p = M.mul(p, x)
        k += 1
    return seen[p], k - seen[p]


def _profile(M: FinMonoid, x: int) -> tuple:
    row, col = M.table[x], [M.table[y][x] for y in range(M.n)]
    return (
        x == M.unit,
        power_profile(M, x),
        len(set(row)),
        len(set(col)),
        sum(1 for y in range(M.n) if M.mul(x, y) == M.mul(y, x)),
        sum(1 for y in range(M.n) if M.mul(x, y) == x),
        sum(1 for y in range(M.n) if M.mul(y, x) == x),
    )


def monoid_isomorphic(M: FinMonoid, N: FinMonoid) -> Verdict:
    """Search for a unit-preserving multiplicative bijection M -> N."""
    if M.n != N.n:
        return Verdict(False, detail="orders differ")
    pm = [_profile(M, x) for x in range(M.n)]
    pn = [_profile(N, x) for x in range(N.n)]
    if sorted(pm) != sorted(pn):
        return Verdict(False, detail="element profiles differ")
    order = sorted(range(M.n), key=lambda x: (sum(p == pm[x] for p in pm), x))
    f = [-1] * M.n
    used = [False] * N.n

    def consistent(x: int) -> bool:
        for y in range(M.n):
            if f[y] < 0:
                continue
            xy, yx = M.mul(x, y), M.mul(y, x)
            if f[xy] >= 0 and f[xy] != N.mul(f[x], f[y]):
                return False
            if f[yx] >= 0 and f[yx] != N.mul(f[y], f[x]):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(N.n):
            if used[y] or pn[y] != pm[x]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and search(i + 1):
                return True
            f[x], used[y] = -1, False
        return False

    if search(0):
        return Verdict(True, tuple(f))
    return Verdict(False, detail="no bijection preserves the product")


def _colours(M: FinMonoid) -> list:
    """Element colours: profiles refined by the colours of products until
    stable. Colours are ranks of isomorphism-invariant signatures, so an
    isomorphism preserves them."""
    sig = [_profile(M, x) for x in range(M.n)]
    rank = {k: i for i, k in enumerate(sorted(set(sig), reverse=True))}
    col = [rank[k] for k in sig]
    while True:
        sig = [(col[x], tuple(sorted((col[y], col[M.table[x][y]], col[M.table[y][x]])
                                     for y in range(M.n))))
               for x in range(M.n)]
        rank = {k: i for i, k in enumerate(sorted(set(sig)))}
        new = [rank[k] for k in sig]
        if len(rank) == len(set(col)):
            return col
        col = new


def canonical_form(M: FinMonoid) -> tuple:
    """Lexicographically least relabelled table, over relabellings that sort
    elements by an isomorphism-invariant colour and put the unit first.

    Two monoids are isomorphic iff their canonical forms agree.
    """
    col = _colours(M)
    keys = sorted(set(col))  # the unit's profile sorts first, alone
    blocks = [[x for x in range(M.n) if col[x] == k] for k in keys]
    sizes = tuple(len(b) for b in blocks)
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [x for blk in choice for x in blk]
        pos = {old: new for new, old in enumerate(order)}
        flat = tuple(pos[M.table[a][b]] for a in order for b in order)
        if best is None or flat < best:
            best = flat
    return (M.n, sizes, best)


# ---------------------------------------------------------------- builders

def cyclic_group(n: int, name: str = "g") -> FinMonoid:
    labels = tuple(f"{name}{k}" if k else "1" for k in range(n))
    return FinMonoid(labels, 0, [[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(M: FinMonoid, N: FinMonoid) -> FinMonoid:
    pairs = [(a, b) for a in range(M.n) for b in range(N.n)]
    pos = {p: i for i, p in enumerate(pairs)}
    table = [[pos[(M.mul(a, c), N.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    labels = tuple((M.elements[a], N.elements[b]) for a, b in pairs)
    return FinMonoid(labels, pos[(M.unit, N.unit)], table)


def abelian_group(*orders: int) -> FinMonoid:
    """Z/n1 x Z/n2 x ... with tuple labels (or plain labels for one factor)."""
    if len(orders) == 1:
        return cyclic_group(orders[0])
    elems = list(product(*(range(n) for n in orders)))
    def op(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))
    return FinMonoid.from_operation(elems, op, tuple(0 for _ in orders))


def adjoin_zero(M: FinMonoid, label="0") -> FinMonoid:
    n = M.n
    table = [list(row) + [n] for row in M.table] + [[n] * (n + 1)]
    return FinMonoid(M.elements + (label,), M.unit, table)


def adjoin_identity(M: FinMonoid, label="1'") -> FinMonoid:
    n = M.n
    table = [list(row) + [i] for i, row in enumerate(M.table)] + [list(range(n + 1))]
    return FinMonoid(M.elements + (label,), n, table)


def chain(n: int) -> FinMonoid:
    """The n-element chain as a semilattice: index 0 is the top, meet = max index."""
    return FinMonoid(tuple(f"c{k}" for k in range(n)), 0,
                     [[max(a, b) for b in range(n)] for a in range(n)])


def multiplicative_mod(n: int) -> FinMonoid:
    """Integers mod n under multiplication, labels 0..n-1, unit at index 1."""
    return FinMonoid(tuple(range(n)), 1 % n, [[(a * b) % n for b in range(n)] for a in range(n)])


def symmetric_inverse_monoid(k: int) -> FinMonoid:
    """All partial injections of {0..k-1}, composed as functions (x*y = x after y)."""
    points = range(k)
    maps = []
    for dom_bits in product((False, True), repeat=k):
        dom = [p for p, b in zip(points, dom_bits) if b]
        for img in permutations(points, len(dom)):
            maps.append(tuple(sorted(zip(dom, img))))
    maps.sort(key=lambda m: (len(m), m))

    def after(x, y):
        fx, fy = dict(x), dict(y)
        return tuple(sorted((a, fx[b]) for a, b in fy.items() if b in fx))

    ident = tuple((p, p) for p in points)
    labels = [m for m in maps]
    return FinMonoid.from_operation(labels, after, ident)
