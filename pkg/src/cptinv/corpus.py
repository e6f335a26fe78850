"""Named example structures used by the tests, the demos and the CLI.

Every builder is re-validated by :func:`check_corpus`, which re-derives the
classification flags recorded in :data:`EXPECTED`.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from . import finalg
from .errors import Refused
from .fincat import DagCategory, from_monoid, is_groupoid, is_inverse_category, validate_category
from .finalg import FinMonoid
from .monoidal import CompactStructure, compact_inverse_check, one_object, validate_compact


# ------------------------------------------------------------- monoids

def triv1() -> FinMonoid:
    return FinMonoid(("1",), 0, [[0]])


def slat2() -> FinMonoid:
    """Two-element chain 0 ≤ 1."""
    return FinMonoid(("1", "0"), 0, [[0, 1], [1, 1]])


def z2zero() -> FinMonoid:
    """{1, a, 0} with a² = 1 and 0 absorbing."""
    return finalg.adjoin_zero(FinMonoid(("1", "a"), 0, [[0, 1], [1, 0]]))


def z4mult() -> FinMonoid:
    return finalg.multiplicative_mod(4)


def i2() -> FinMonoid:
    return finalg.symmetric_inverse_monoid(2)


def zn(n: int) -> FinMonoid:
    return finalg.cyclic_group(n)


MONOIDS = {
    "triv1": triv1,
    "slat2": slat2,
    "z2zero": z2zero,
    "z4mult": z4mult,
    "i2": i2,
    "z2": lambda: zn(2),
    "z3": lambda: zn(3),
    "z4": lambda: zn(4),
    "z2xz2": lambda: finalg.abelian_group(2, 2),
    "chain3": lambda: finalg.chain(3),
}


# ------------------------------------------------------------- categories

def _category_from_arrows(objects, arrows, compose_fn, dagger_fn, identity_fn) -> DagCategory:
    """arrows: list of (label, dom, cod) with labels usable by the callbacks."""
    index = {(lab, a, b): i for i, (lab, a, b) in enumerate(arrows)}
    out_of = {}
    for i, (lab, a, b) in enumerate(arrows):
        out_of.setdefault(a, []).append(i)
    compose = {}
    for f, (lf, a, b) in enumerate(arrows):
        for g in out_of.get(b, []):
            lg, _, c = arrows[g]
            compose[(g, f)] = index[(compose_fn(lg, lf), a, c)]
    dagger = [index[(dagger_fn(lab), b, a)] for lab, a, b in arrows]
    identity = [index[(identity_fn(x), x, x)] for x in range(len(objects))]
    return DagCategory(objects, [lab for lab, _, _ in arrows], [a for _, a, _ in arrows],
                       [b for _, _, b in arrows], identity, compose, dagger)


def pinj2() -> DagCategory:
    """Partial injections between the sets of sizes 0, 1, 2."""
    sizes = (0, 1, 2)
    arrows = []
    for a, n in enumerate(sizes):
        for b, m in enumerate(sizes):
            maps = []
            for k in range(min(n, m) + 1):
                for dom in combinations(range(n), k):
                    for img in permutations(range(m), k):
                        maps.append(tuple(zip(dom, img)))
            maps.sort(key=lambda f: (len(f), f))
            arrows += [(f, a, b) for f in maps]

    def comp(g, f):
        gd = dict(g)
        return tuple((x, gd[y]) for x, y in f if y in gd)

    def dag(f):
        return tuple(sorted((y, x) for x, y in f))

    return _category_from_arrows(tuple(f"set{n}" for n in sizes), arrows, comp, dag,
                                 lambda x: tuple((i, i) for i in range(sizes[x])))


def _relations(n: int, m: int) -> list:
    pairs = [(i, j) for i in range(n) for j in range(m)]
    rels = []
    for bits in product((0, 1), repeat=len(pairs)):
        rels.append(tuple(p for p, b in zip(pairs, bits) if b))
    rels.sort(key=lambda r: (len(r), r))
    return rels


def frel2(sizes=(0, 1, 2)) -> DagCategory:
    """All relations between sets of the given sizes, dagger = converse."""
    arrows = []
    for a, n in enumerate(sizes):
        for b, m in enumerate(sizes):
            arrows += [(r, a, b) for r in _relations(n, m)]

    def comp(s, r):
        return tuple(sorted({(x, z) for x, y in r for y2, z in s if y == y2}))

    def dag(r):
        return tuple(sorted((y, x) for x, y in r))

    return _category_from_arrows(tuple(f"set{n}" for n in sizes), arrows, comp, dag,
                                 lambda x: tuple((i, i) for i in range(sizes[x])))


def frel_compact() -> CompactStructure:
    """Relations on the sets of sizes {0, 1}: the largest tensor-closed family
    inside frel2 under the cartesian product.  Records the restriction."""
    sizes = (0, 1)
    C = frel2(sizes)
    size_index = {n: i for i, n in enumerate(sizes)}
    tobj = {(a, b): size_index[sizes[a] * sizes[b]] for a in range(2) for b in range(2)}

    def pair_index(i, j, m):
        return i * m + j

    tmor = {}
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            rf, rg = C.labels[f], C.labels[g]
            mg_dom, mg_cod = sizes[C.dom[g]], sizes[C.cod[g]]
            rel = tuple(sorted((pair_index(x, u, mg_dom), pair_index(y, v, mg_cod))
                               for x, y in rf for u, v in rg))
            dom = tobj[(C.dom[f], C.dom[g])]
            cod = tobj[(C.cod[f], C.cod[g])]
            tmor[(f, g)] = next(m for m in C.hom(dom, cod) if C.labels[m] == rel)
    ident = C.identity
    unit = size_index[1]
    assoc = {(a, b, c): ident[tobj[(tobj[(a, b)], c)]] for a in range(2) for b in range(2) for c in range(2)}
    symm = {(a, b): ident[tobj[(a, b)]] for a in range(2) for b in range(2)}
    eta = []
    for a in range(2):
        n = sizes[a]
        rel = tuple(sorted((0, pair_index(i, i, n)) for i in range(n)))
        eta.append(next(m for m in C.hom(unit, tobj[(a, a)]) if C.labels[m] == rel))
    return CompactStructure(C, unit, tobj, tmor, assoc, [ident[a] for a in range(2)],
                            [ident[a] for a in range(2)], symm, (0, 1), eta,
                            meta={"restricted_objects": "sets of size 0 and 1; sizes {0,1,2} are not closed under ⊗"})


def discrete_group(G: FinMonoid) -> CompactStructure:
    """An abelian group as a discrete compact category: objects are elements,
    only identities, ⊗ = product, A* = A⁻¹."""
    if not G.is_commutative:
        raise Refused("discrete compact category needs an abelian group")
    n = G.n
    inv = [next(b for b in range(n) if G.mul(a, b) == G.unit) for a in range(n)]
    B = DagCategory(G.elements, [("id", x) for x in G.elements], range(n), range(n), range(n),
                    {(a, a): a for a in range(n)}, range(n))
    tobj = {(a, b): G.mul(a, b) for a in range(n) for b in range(n)}
    assoc = {(a, b, c): G.prod(a, b, c) for a in range(n) for b in range(n) for c in range(n)}
    return CompactStructure(B, G.unit, tobj, dict(tobj), assoc, range(n), range(n), dict(tobj),
                            inv, [G.unit] * n)


def one_object_compact(M: FinMonoid, involution=None) -> CompactStructure:
    """Commutative monoid as a one-object compact category; the dagger is the
    inverse-monoid dagger when it exists, else the identity involution."""
    if involution is None:
        try:
            involution = finalg.inverse_structure(M).dagger
        except Refused:
            involution = tuple(range(M.n))
    return one_object(M, involution)


def z2disc() -> CompactStructure:
    return discrete_group(zn(2))


def zndisc(n: int) -> CompactStructure:
    return discrete_group(zn(n))


def _product(a, b):
    from .constructions import product as cat_product
    return cat_product(a, b)


COMPACT = {
    "triv1": lambda: one_object_compact(triv1()),
    "slat2": lambda: one_object_compact(slat2()),
    "z2zero": lambda: one_object_compact(z2zero()),
    "z4mult": lambda: one_object_compact(z4mult()),
    "z2": lambda: one_object_compact(zn(2)),
    "z3": lambda: one_object_compact(zn(3)),
    "z2disc": z2disc,
    "z3disc": lambda: zndisc(3),
    "frel01": frel_compact,
    "z2disc_x_z2zero": lambda: _product(z2disc(), one_object_compact(z2zero())),
    "z2disc_x_z4mult": lambda: _product(z2disc(), one_object_compact(z4mult())),
    "z2zero_x_z2zero": lambda: _product(one_object_compact(z2zero()), one_object_compact(z2zero())),
}

CATEGORIES = {
    "pinj2": pinj2,
    "frel2": frel2,
}

# inverse?, groupoid? for the dagger categories; compact items also list compact inverse
EXPECTED = {
    "pinj2": {"inverse": True, "groupoid": False},
    "frel2": {"inverse": False, "groupoid": False},
    "triv1": {"inverse": True, "groupoid": True},
    "slat2": {"inverse": True, "groupoid": False},
    "z2zero": {"inverse": True, "groupoid": False},
    "z4mult": {"inverse": False, "groupoid": False},
    "z2": {"inverse": True, "groupoid": True},
    "z3": {"inverse": True, "groupoid": True},
    "z2disc": {"inverse": True, "groupoid": True},
    "z3disc": {"inverse": True, "groupoid": True},
    "frel01": {"inverse": True, "groupoid": False},
    "z2disc_x_z2zero": {"inverse": True, "groupoid": False},
    "z2disc_x_z4mult": {"inverse": False, "groupoid": False},
    "z2zero_x_z2zero": {"inverse": True, "groupoid": False},
}


def build(name: str):
    for table in (COMPACT, CATEGORIES, MONOIDS):
        if name in table:
            return table[name]()
    raise KeyError(f"unknown corpus item {name!r}")


def compact_inverse_items() -> dict:
    return {k: f() for k, f in COMPACT.items() if EXPECTED[k]["inverse"]}


def check_corpus() -> list[str]:
    """Re-derive every recorded flag; returns the mismatches."""
    problems = []
    for name, f in MONOIDS.items():
        if finalg.validate_monoid(f()):
            problems.append(f"{name}: not a monoid")
    for name, f in list(CATEGORIES.items()) + list(COMPACT.items()):
        obj = f()
        base = obj.base if isinstance(obj, CompactStructure) else obj
        if validate_category(base):
            problems.append(f"{name}: not a dagger category")
            continue
        if isinstance(obj, CompactStructure) and validate_compact(obj):
            problems.append(f"{name}: not compact")
        flags = {"inverse": is_inverse_category(base).ok, "groupoid": is_groupoid(base).ok}
        if flags != EXPECTED[name]:
            problems.append(f"{name}: flags {flags} != {EXPECTED[name]}")
        if isinstance(obj, CompactStructure) and compact_inverse_check(obj).ok != flags["inverse"]:
            problems.append(f"{name}: compact inverse check disagrees")
    return problems
