"""Commutative inverse monoids as semilattices of abelian groups, in both
directions, for objects and for morphisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import _iso
from .errors import Refused, StructureError, Verdict
from .finalg import (FinMonoid, FinSemilattice, InverseStructure, idempotent_semilattice,
                     inverse_structure, is_homomorphism, power_profile, validate_monoid)


@dataclass(frozen=True, eq=False)
class AbGroupDiagram:
    """``fibers[s]`` is an abelian group for each element index s of S;
    ``restrict[(s, t)]`` (for s ≤ t) maps fiber t to fiber s."""

    S: FinSemilattice
    fibers: tuple
    restrict: dict
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        object.__setattr__(self, "restrict", {k: tuple(v) for k, v in self.restrict.items()})
        if len(self.fibers) != self.S.n:
            raise StructureError("one fiber per semilattice element is required")
        for (s, t), m in self.restrict.items():
            if not (0 <= s < self.S.n and 0 <= t < self.S.n):
                raise StructureError(f"restriction index {(s, t)} out of range")
            if len(m) != self.fibers[t].n or any(not 0 <= v < self.fibers[s].n for v in m):
                raise StructureError(f"restriction {(s, t)} is not a map between the fibers")

    @property
    def order(self) -> int:
        return sum(F.n for F in self.fibers)


@dataclass(frozen=True)
class JarekMorphism:
    """phi: S → S'; theta[s]: fiber(s) → fiber'(phi(s))."""

    phi: tuple
    theta: tuple


def _group_inverse(G: FinMonoid, x: int) -> int | None:
    for y in range(G.n):
        if G.mul(x, y) == G.unit and G.mul(y, x) == G.unit:
            return y
    return None


def validate_abdiagram(D: AbGroupDiagram) -> list[str]:
    report = []
    S = D.S
    for s, F in enumerate(D.fibers):
        problems = validate_monoid(F)
        if problems:
            report.append(f"fiber {s}: {problems[0]}")
            continue
        if not F.is_commutative:
            report.append(f"fiber {s} is not commutative")
        if any(_group_inverse(F, x) is None for x in range(F.n)):
            report.append(f"fiber {s} is not a group")
    if report:
        return report
    for s, t in product(range(S.n), repeat=2):
        if S.leq(s, t) != ((s, t) in D.restrict):
            report.append(f"restriction {(s, t)} defined iff s <= t fails")
    if report:
        return report
    for s in range(S.n):
        if D.restrict[(s, s)] != tuple(range(D.fibers[s].n)):
            report.append(f"restriction {(s, s)} is not the identity")
    for (s, t), m in sorted(D.restrict.items()):
        if not is_homomorphism(m, D.fibers[t], D.fibers[s]):
            report.append(f"restriction {(s, t)} is not a homomorphism")
    for r, s, t in product(range(S.n), repeat=3):
        if S.leq(r, s) and S.leq(s, t):
            rs, st, rt = D.restrict[(r, s)], D.restrict[(s, t)], D.restrict[(r, t)]
            if any(rs[st[x]] != rt[x] for x in range(D.fibers[t].n)):
                report.append(f"restrictions are not functorial at {(r, s, t)}")
    return report


def canonical_carrier(I: InverseStructure) -> tuple:
    """Elements grouped by idempotent xx† (idempotents in index order), each
    group in index order."""
    M, d = I.base, I.dagger
    idem = [e for e in range(M.n) if M.mul(e, d[e]) == e]
    return tuple(x for e in idem for x in range(M.n) if M.mul(x, d[x]) == e)


def jarek_decompose(I: InverseStructure) -> AbGroupDiagram:
    """S = idempotents, F(s) = {x | xx† = s} with unit s, F(s ≤ t)(x) = sx."""
    M, d = I.base, I.dagger
    if not M.is_commutative:
        raise Refused("the decomposition needs a commutative inverse monoid")
    S = idempotent_semilattice(I)
    carriers = []
    fibers = []
    for s in S.carrier:
        xs = [x for x in range(M.n) if M.mul(x, d[x]) == s]
        pos = {x: i for i, x in enumerate(xs)}
        fibers.append(FinMonoid(tuple(M.elements[x] for x in xs), pos[s],
                                [[pos[M.mul(x, y)] for y in xs] for x in xs]))
        carriers.append(tuple(xs))
    restrict = {}
    for i, s in enumerate(S.carrier):
        for j, t in enumerate(S.carrier):
            if S.leq(i, j):
                pos = {x: k for k, x in enumerate(carriers[i])}
                restrict[(i, j)] = tuple(pos[M.mul(s, x)] for x in carriers[j])
    return AbGroupDiagram(S, fibers, restrict, {"carriers": tuple(carriers)})


def jarek_compose(D: AbGroupDiagram) -> InverseStructure:
    """Disjoint union of the fibers, S-major then fiber index, with
    xy = F(s∧t ≤ s)(x) · F(s∧t ≤ t)(y)."""
    S = D.S
    offset, elems, home = [], [], []
    for s, F in enumerate(D.fibers):
        offset.append(len(elems))
        for x in range(F.n):
            elems.append(F.elements[x])
            home.append((s, x))
    table = []
    for s, x in home:
        row = []
        for t, y in home:
            u = S.meet(s, t)
            F = D.fibers[u]
            row.append(offset[u] + F.mul(D.restrict[(u, s)][x], D.restrict[(u, t)][y]))
        table.append(row)
    if len(set(elems)) != len(elems):
        elems = [(S.base.elements[s], D.fibers[s].elements[x]) for s, x in home]
    M = FinMonoid(tuple(elems), offset[S.top] + D.fibers[S.top].unit, table)
    dagger = [offset[s] + _group_inverse(D.fibers[s], x) for s, x in home]
    return InverseStructure(M, tuple(dagger))


def jarek_morphism_decompose(f, I: InverseStructure, J: InverseStructure) -> JarekMorphism:
    """φ(s) = f(s) on idempotents, θ_s(x) = f(x) on fibers."""
    f = tuple(f)
    M, N = I.base, J.base
    v = is_homomorphism(f, M, N)
    if not v:
        raise Refused("not a monoid homomorphism", v.witness)
    for x in range(M.n):
        if f[I.dagger[x]] != J.dagger[f[x]]:
            raise Refused("the map does not respect the involution", x)
    D, E = jarek_decompose(I), jarek_decompose(J)
    spos = {e: i for i, e in enumerate(E.S.carrier)}
    phi = tuple(spos[f[s]] for s in D.S.carrier)
    theta = []
    for i, xs in enumerate(D.meta["carriers"]):
        target = {x: k for k, x in enumerate(E.meta["carriers"][phi[i]])}
        theta.append(tuple(target[f[x]] for x in xs))
    return JarekMorphism(phi, tuple(theta))


def check_jarek_morphism(m: JarekMorphism, D: AbGroupDiagram, E: AbGroupDiagram) -> Verdict:
    """φ preserves top and meets, each θ_s is a homomorphism, squares commute."""
    S, T = D.S, E.S
    if m.phi[S.top] != T.top:
        return Verdict(False, ("top",))
    for s, t in product(range(S.n), repeat=2):
        if m.phi[S.meet(s, t)] != T.meet(m.phi[s], m.phi[t]):
            return Verdict(False, ("meet", s, t))
    for s in range(S.n):
        if not is_homomorphism(m.theta[s], D.fibers[s], E.fibers[m.phi[s]]):
            return Verdict(False, ("theta", s))
    for (s, t), r in D.restrict.items():
        r2 = E.restrict[(m.phi[s], m.phi[t])]
        for x in range(D.fibers[t].n):
            if m.theta[s][r[x]] != r2[m.theta[t][x]]:
                return Verdict(False, ("square", s, t, x))
    return Verdict(True)


def compose_jarek_morphisms(n: JarekMorphism, m: JarekMorphism) -> JarekMorphism:
    """n after m."""
    return JarekMorphism(tuple(n.phi[p] for p in m.phi),
                         tuple(tuple(n.theta[m.phi[s]][y] for y in th) for s, th in enumerate(m.theta)))


def jarek_morphism_compose(m: JarekMorphism, D: AbGroupDiagram, E: AbGroupDiagram) -> tuple:
    """The homomorphism jarek_compose(D) → jarek_compose(E) induced by (φ, θ)."""
    def offsets(X):
        out, k = [], 0
        for F in X.fibers:
            out.append(k)
            k += F.n
        return out

    oe = offsets(E)
    return tuple(oe[m.phi[s]] + m.theta[s][x] for s, F in enumerate(D.fibers) for x in range(F.n))


def jarek_roundtrip_diagram(D: AbGroupDiagram) -> Verdict:
    """Decompose the composite of D and exhibit the isomorphism s ↦ unit of
    F(s), x ↦ x; the witness is the JarekMorphism."""
    G = jarek_decompose(jarek_compose(D))
    offset, k = [], 0
    for F in D.fibers:
        offset.append(k)
        k += F.n
    spos = {e: i for i, e in enumerate(G.S.carrier)}
    phi = tuple(spos[offset[s] + D.fibers[s].unit] for s in range(D.S.n))
    theta = []
    for s, F in enumerate(D.fibers):
        target = {x: i for i, x in enumerate(G.meta["carriers"][phi[s]])}
        theta.append(tuple(target[offset[s] + x] for x in range(F.n)))
    m = JarekMorphism(phi, tuple(theta))
    bijective = (sorted(phi) == list(range(G.S.n))
                 and all(sorted(th) == list(range(G.fibers[phi[s]].n)) for s, th in enumerate(theta)))
    v = check_jarek_morphism(m, D, G)
    if not bijective:
        return Verdict(False, m, "not bijective")
    if not v:
        return Verdict(False, v.witness, "not a diagram morphism")
    return Verdict(True, m, extra={"diagram": G})


def _diagram_structure(D: AbGroupDiagram) -> _iso.Structure:
    S = D.S
    offset, k = [], S.n
    for F in D.fibers:
        offset.append(k)
        k += F.n
    colors = [("s", sum(S.leq(t, s) for t in range(S.n)), D.fibers[s].n, s == S.top) for s in range(S.n)]
    for s, F in enumerate(D.fibers):
        colors += [("x", F.n, power_profile(F, x)) for x in range(F.n)]
    st = _iso.Structure(colors)
    for s, t in product(range(S.n), repeat=2):
        st.add("meet", (s, t), S.meet(s, t))
    for s, F in enumerate(D.fibers):
        st.add("unit", (s,), offset[s] + F.unit)
        for x in range(F.n):
            st.add("in", (offset[s] + x,), s)
            for y in range(F.n):
                st.add("mul", (offset[s] + x, offset[s] + y), offset[s] + F.mul(x, y))
    for (s, t), r in D.restrict.items():
        for x in range(D.fibers[t].n):
            st.add("res", (offset[t] + x, s), offset[s] + r[x])
    return st


def abdiagram_isomorphic(D: AbGroupDiagram, E: AbGroupDiagram) -> Verdict:
    """Isomorphism search; the witness is a JarekMorphism."""
    if D.S.n != E.S.n or sorted(F.n for F in D.fibers) != sorted(F.n for F in E.fibers):
        return Verdict(False, detail="sizes differ")
    f = _iso.find_isomorphism(_diagram_structure(D), _diagram_structure(E))
    if f is None:
        return Verdict(False, detail="no isomorphism")
    n = D.S.n
    phi = tuple(f[:n])
    oe, k = [], n
    for F in E.fibers:
        oe.append(k)
        k += F.n
    theta, pos = [], n
    for s, F in enumerate(D.fibers):
        theta.append(tuple(f[pos + x] - oe[phi[s]] for x in range(F.n)))
        pos += F.n
    return Verdict(True, JarekMorphism(phi, tuple(theta)))


def single_fiber(G: FinMonoid) -> AbGroupDiagram:
    """The one-point diagram with fiber G."""
    S = FinSemilattice(FinMonoid(("⊤",), 0, [[0]]))
    return AbGroupDiagram(S, (G,), {(0, 0): tuple(range(G.n))})


def commutative_inverse(M: FinMonoid) -> InverseStructure:
    I = inverse_structure(M)
    if not M.is_commutative:
        raise Refused("monoid is not commutative")
    return I


def jarek_roundtrip(I: InverseStructure) -> Verdict:
    """compose(decompose(I)) must equal I relabelled by canonical_carrier,
    table for table and dagger for dagger; the witness is the first
    differing product."""
    J = jarek_compose(jarek_decompose(I))
    order = canonical_carrier(I)
    ref = I.base.relabel(order)
    pos = {old: new for new, old in enumerate(order)}
    ref_dag = tuple(pos[I.dagger[x]] for x in order)
    if J.base.unit != ref.unit:
        return Verdict(False, ("unit", J.base.unit, ref.unit), "units differ")
    for a in range(ref.n):
        for b in range(ref.n):
            if J.base.table[a][b] != ref.table[a][b]:
                return Verdict(False, (a, b), "products differ")
    if J.dagger != ref_dag:
        return Verdict(False, "dagger", "daggers differ")
    return Verdict(True, extra={"composite": J})
