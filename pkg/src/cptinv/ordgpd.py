"""Ordered and inductive groupoids, the passage between inverse monoids and
inductive groupoids, and the groupoid of idempotents of an inverse category.

Only the monotonicity and restriction laws of an ordered groupoid are checked;
Lawson-style laws relating restriction to composition are reported as
``NOT_VERIFIED``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import Refused, Verdict
from .finalg import FinMonoid, InverseStructure, monoid_isomorphic, natural_order
from .fincat import DagCategory, is_groupoid, is_inverse_category, validate_category

NOT_VERIFIED = ("restriction versus composition (Lawson's further axioms)",)


@dataclass(frozen=True, eq=False)
class OrderedGroupoid:
    """``restriction[(f, A)]`` is (f|A): A → B' for A ≤ dom f."""

    groupoid: DagCategory
    obj_order: frozenset
    mor_order: frozenset
    restriction: dict
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "obj_order", frozenset(self.obj_order))
        object.__setattr__(self, "mor_order", frozenset(self.mor_order))
        object.__setattr__(self, "restriction", dict(self.restriction))

    def obj_leq(self, a: int, b: int) -> bool:
        return (a, b) in self.obj_order

    def leq(self, f: int, g: int) -> bool:
        return (f, g) in self.mor_order

    def restrict(self, f: int, a: int) -> int:
        return self.restriction[(f, a)]

    def meet(self, a: int, b: int) -> int | None:
        """Greatest lower bound of two objects, or None."""
        lower = [c for c in range(self.groupoid.n_objects) if self.obj_leq(c, a) and self.obj_leq(c, b)]
        tops = [c for c in lower if all(self.obj_leq(d, c) for d in lower)]
        return tops[0] if tops else None


@dataclass(frozen=True, eq=False)
class LocallyCompleteIndGpd:
    base: OrderedGroupoid
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))


def _partial_order_report(rel: frozenset, n: int, what: str) -> list[str]:
    report = []
    for a in range(n):
        if (a, a) not in rel:
            report.append(f"{what} order is not reflexive at {a}")
    for a, b in rel:
        if a != b and (b, a) in rel:
            report.append(f"{what} order is not antisymmetric at {(a, b)}")
    succ = {}
    for a, b in rel:
        succ.setdefault(a, set()).add(b)
    for a, b in rel:
        for c in succ.get(b, ()):
            if (a, c) not in rel:
                report.append(f"{what} order is not transitive at {(a, b, c)}")
    return report


def validate_ordered_groupoid(G: OrderedGroupoid) -> list[str]:
    """Every violated order, monotonicity or restriction law."""
    C = G.groupoid
    report = validate_category(C)
    if report:
        return report
    if not is_groupoid(C):
        return ["underlying category is not a groupoid"]
    no, nm = C.n_objects, C.n_morphisms
    report += _partial_order_report(G.obj_order, no, "object")
    report += _partial_order_report(G.mor_order, nm, "morphism")
    for f, g in sorted(G.mor_order):
        if not G.obj_leq(C.dom[f], C.dom[g]):
            report.append(f"dom is not monotone at {(f, g)}")
        if not G.obj_leq(C.cod[f], C.cod[g]):
            report.append(f"cod is not monotone at {(f, g)}")
        if not G.leq(C.dagger[f], C.dagger[g]):
            report.append(f"inverse is not monotone at {(f, g)}")
    for a, b in product(range(no), repeat=2):
        if G.obj_leq(a, b) != G.leq(C.identity[a], C.identity[b]):
            report.append(f"order on identities disagrees with object order at {(a, b)}")
    # composition is monotone on composable pairs ordered componentwise
    above = [[] for _ in range(nm)]
    for f, f2 in sorted(G.mor_order):
        above[f].append(f2)
    for (g, f), gf in sorted(C.compose.items()):
        for g2, f2 in product(above[g], above[f]):
            if (g2, f2) in C.compose:
                if not G.leq(gf, C.compose[(g2, f2)]):
                    report.append(f"composition is not monotone at {(g, f)} <= {(g2, f2)}")
    for f in range(nm):
        for a in range(no):
            key = (f, a)
            if not G.obj_leq(a, C.dom[f]):
                if key in G.restriction:
                    report.append(f"restriction {key} defined although {a} is not below dom")
                continue
            if key not in G.restriction:
                report.append(f"restriction {key} missing")
                continue
            r = G.restriction[key]
            if C.dom[r] != a:
                report.append(f"restriction {key} has domain {C.dom[r]}")
            if not G.leq(r, f):
                report.append(f"restriction {key} is not below the morphism")
    for (f, a), r in sorted(G.restriction.items()):
        for b in range(no):
            if G.obj_leq(b, a) and (r, b) in G.restriction and (f, b) in G.restriction:
                if G.restriction[(r, b)] != G.restriction[(f, b)]:
                    report.append(f"restriction is not functorial at {(f, a, b)}")
    return report


def is_inductive(G: OrderedGroupoid) -> Verdict:
    no = G.groupoid.n_objects
    for a, b in product(range(no), repeat=2):
        if G.meet(a, b) is None:
            return Verdict(False, (a, b), "objects without a meet")
    return Verdict(True)


def discrete(C: DagCategory) -> OrderedGroupoid:
    """Discrete order with identity restrictions."""
    return OrderedGroupoid(
        C,
        {(a, a) for a in range(C.n_objects)},
        {(f, f) for f in range(C.n_morphisms)},
        {(f, C.dom[f]): f for f in range(C.n_morphisms)},
    )


def esn_forward(I: InverseStructure) -> OrderedGroupoid:
    """Objects are the idempotents; x becomes an arrow x†x → xx†."""
    M, d = I.base, I.dagger
    idem = [e for e in range(M.n) if M.mul(e, d[e]) == e]
    obj = {e: i for i, e in enumerate(idem)}
    dom = [obj[M.mul(d[x], x)] for x in range(M.n)]
    cod = [obj[M.mul(x, d[x])] for x in range(M.n)]
    compose = {(y, x): M.mul(y, x) for x in range(M.n) for y in range(M.n) if dom[y] == cod[x]}
    C = DagCategory([M.elements[e] for e in idem], M.elements, dom, cod, idem, compose, d)
    obj_order = {(obj[e], obj[f]) for e in idem for f in idem if M.mul(e, f) == e}
    restriction = {(x, obj[s]): M.mul(x, s) for x in range(M.n) for s in idem
                   if M.mul(s, M.mul(d[x], x)) == s}
    return OrderedGroupoid(C, obj_order, natural_order(I), restriction, {"idempotents": tuple(idem)})


def esn_reverse(G: OrderedGroupoid) -> InverseStructure:
    """Pseudoproduct x∗y = (x|e)∘(y↾e) with e = dom x ∧ cod y and
    corestriction y↾e = ((y⁻¹)|e)⁻¹.  Elements are the morphisms of G."""
    C = G.groupoid
    no, nm = C.n_objects, C.n_morphisms
    meets = {}
    for a, b in product(range(no), repeat=2):
        m = G.meet(a, b)
        if m is None:
            raise Refused(f"objects {a} and {b} have no meet", (a, b))
        meets[(a, b)] = m
    tops = [a for a in range(no) if all(G.obj_leq(b, a) for b in range(no))]
    if not tops:
        raise Refused("the object order has no top")
    inv = C.dagger
    table = []
    for x in range(nm):
        row = []
        for y in range(nm):
            e = meets[(C.dom[x], C.cod[y])]
            try:
                xe = G.restriction[(x, e)]
                ye = inv[G.restriction[(inv[y], e)]]
            except KeyError:
                raise Refused("restriction missing below a meet", (x, y)) from None
            row.append(C.compose[(xe, ye)])
        table.append(row)
    M = FinMonoid(C.labels, C.identity[tops[0]], table)
    return InverseStructure(M, inv)


def validate_locally_complete(L: LocallyCompleteIndGpd) -> list[str]:
    G = L.base
    report = validate_ordered_groupoid(G)
    no = G.groupoid.n_objects
    where = {}
    for i, blk in enumerate(L.blocks):
        for a in blk:
            if a in where:
                report.append(f"object {a} lies in two blocks")
            where[a] = i
    if sorted(where) != list(range(no)):
        report.append("blocks do not partition the objects")
        return report
    for a, b in product(range(no), repeat=2):
        comparable = G.obj_leq(a, b) or G.obj_leq(b, a)
        if comparable and where[a] != where[b]:
            report.append(f"objects {a}, {b} are comparable across blocks")
    for blk in L.blocks:
        for a, b in product(blk, repeat=2):
            m = G.meet(a, b)
            if m is None or m not in blk:
                report.append(f"objects {a}, {b} have no meet in their block")
        if not any(all(G.obj_leq(b, a) for b in blk) for a in blk):
            report.append(f"block {blk} has no top")
    return report


def block_comparability_check(L: LocallyCompleteIndGpd) -> Verdict:
    """No comparabilities across blocks, and every block member lies below
    the block's first object (its top)."""
    G = L.base
    where = {a: i for i, blk in enumerate(L.blocks) for a in blk}
    for a, b in product(range(G.groupoid.n_objects), repeat=2):
        comparable = G.obj_leq(a, b) or G.obj_leq(b, a)
        if comparable and where[a] != where[b]:
            return Verdict(False, (a, b), "comparable across blocks")
    for blk in L.blocks:
        top = blk[0]
        for a in blk:
            if not G.obj_leq(a, top):
                return Verdict(False, (a, top), "block member not below the block top")
    return Verdict(True)


def dewolf_pronk(C: DagCategory) -> LocallyCompleteIndGpd:
    """Objects are the idempotents ff† on each object A of C (one block per A,
    top first); each morphism f becomes an arrow f†f → ff†."""
    if not is_inverse_category(C):
        raise Refused("the construction needs an inverse category")
    objects, labels, blocks, where = [], [], [], {}
    for a in range(C.n_objects):
        ident = C.identity[a]
        idem = sorted({C.comp(f, C.dag(f)) for f in C.endos(a)}, key=lambda e: (e != ident, e))
        blk = []
        for e in idem:
            where[e] = len(objects)
            blk.append(len(objects))
            objects.append((C.objects[a], C.labels[e]))
        blocks.append(blk)
    nm = C.n_morphisms
    dom = [where[C.comp(C.dag(f), f)] for f in range(nm)]
    cod = [where[C.comp(f, C.dag(f))] for f in range(nm)]
    identity = [0] * len(objects)
    for e, i in where.items():
        identity[i] = e
    compose = {(g, f): h for (g, f), h in C.compose.items() if dom[g] == cod[f]}
    G = DagCategory(objects, C.labels, dom, cod, identity, compose, C.dagger)
    obj_order = {(where[e], where[e2]) for e in where for e2 in where
                 if C.dom[e] == C.dom[e2] and C.comp(e2, e) == e}
    mor_order = {(f, g) for f in range(nm) for g in range(nm)
                 if C.dom[f] == C.dom[g] and C.cod[f] == C.cod[g]
                 and C.comp(g, C.dag(f), f) == f}
    restriction = {(f, where[s]): C.comp(f, s) for f in range(nm) for s in where
                   if C.dom[s] == C.dom[f] and C.comp(C.dag(f), f, s) == s}
    base = OrderedGroupoid(G, obj_order, mor_order, restriction)
    return LocallyCompleteIndGpd(base, blocks)


def esn_roundtrip(I: InverseStructure) -> Verdict:
    """The forward image validates, is inductive, and the pseudoproduct
    monoid is isomorphic to I; the witness is the isomorphism."""
    G = esn_forward(I)
    problems = validate_ordered_groupoid(G)
    if problems:
        return Verdict(False, problems[0], "forward image is not an ordered groupoid")
    ind = is_inductive(G)
    if not ind:
        return Verdict(False, ind.witness, "forward image is not inductive")
    iso = monoid_isomorphic(esn_reverse(G).base, I.base)
    if not iso:
        return Verdict(False, None, "pseudoproduct monoid is not isomorphic: " + iso.detail)
    return Verdict(True, iso.witness)
