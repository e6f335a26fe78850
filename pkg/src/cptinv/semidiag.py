"""Semilattice-indexed diagrams of dagger categories and the inverse category
obtained by gluing their hom-sets along the meet."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import _iso
from .errors import Refused, StructureError, Verdict
from .finalg import FinSemilattice
from .fincat import (DagCategory, Functor, category_structure, check_functor, from_monoid,
                     identity_functor, is_groupoid, validate_category)
from .monoidal import CompactStructure, check_monoidal_functor, validate_compact


@dataclass(frozen=True, eq=False)
class SemilatticeDiagram:
    """``fibers[s]`` is a DagCategory or CompactStructure; ``restrict[(s, t)]``
    for s ≤ t is a Functor fiber(t) → fiber(s).  For compact fibers,
    ``psi[(s, t)] = (ψ0, {(A, B): ψ_{A,B}})`` are the structure maps of the
    restriction, as morphisms of fiber(s).

    By default all fibers share the objects of the top fiber and restrictions
    are the identity on objects.  ``nested`` lets fibers grow downwards:
    restrictions are injective on objects and the bottom fiber carries every
    object.  ``padded`` keeps one object list for every fiber but lets
    restrictions move objects; such diagrams are not glued.  ``relaxed`` drops
    all object conditions (input to padding only).
    """

    S: FinSemilattice
    fibers: tuple
    restrict: dict
    psi: dict = field(default_factory=dict)
    relaxed: bool = False
    nested: bool = False
    padded: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        object.__setattr__(self, "restrict", dict(self.restrict))
        object.__setattr__(self, "psi", dict(self.psi))
        if len(self.fibers) != self.S.n:
            raise StructureError("one fiber per semilattice element is required")

    @property
    def compact(self) -> bool:
        return all(isinstance(F, CompactStructure) for F in self.fibers)

    def cat(self, s: int) -> DagCategory:
        F = self.fibers[s]
        return F.base if isinstance(F, CompactStructure) else F


@dataclass(frozen=True)
class DiagramMorphism:
    """phi: S → S' on element indices; theta[s]: fiber(s) → fiber'(phi(s))."""

    phi: tuple
    theta: tuple


# ------------------------------------------------------------ validation

def validate_diagram(D: SemilatticeDiagram) -> list[str]:
    """Shared objects, functoriality, dagger and monoidal preservation."""
    S = D.S
    report = []
    for s in range(S.n):
        F = D.fibers[s]
        problems = validate_compact(F) if isinstance(F, CompactStructure) else validate_category(F)
        report += [f"fiber {s}: {p}" for p in problems]
    if report:
        return report
    if not D.relaxed and not D.nested:
        objs = D.cat(S.top).objects
        for s in range(S.n):
            if D.cat(s).objects != objs:
                report.append(f"fiber {s} does not share the objects of the top fiber")
    for s, t in product(range(S.n), repeat=2):
        if S.leq(s, t) != ((s, t) in D.restrict):
            report.append(f"restriction {(s, t)} defined iff s <= t fails")
    if report:
        return report
    for (s, t), F in sorted(D.restrict.items()):
        try:
            v = check_functor(F, D.cat(t), D.cat(s), dagger=True)
        except StructureError as e:
            report.append(f"restriction {(s, t)} is ill-typed: {e}")
            continue
        if not v:
            report.append(f"restriction {(s, t)} is not a dagger functor: {v.witness}")
        if (not D.relaxed and not D.nested and not D.padded
                and F.obj != tuple(range(D.cat(t).n_objects))):
            report.append(f"restriction {(s, t)} is not the identity on objects")
        if D.nested and len(set(F.obj)) != len(F.obj):
            report.append(f"restriction {(s, t)} is not injective on objects")
    for s in range(S.n):
        if D.restrict[(s, s)] != identity_functor(D.cat(s)):
            report.append(f"restriction {(s, s)} is not the identity")
    for r, s, t in product(range(S.n), repeat=3):
        if S.leq(r, s) and S.leq(s, t):
            rs, st, rt = D.restrict[(r, s)], D.restrict[(s, t)], D.restrict[(r, t)]
            if any(rs.mor[st.mor[m]] != rt.mor[m] for m in range(D.cat(t).n_morphisms)):
                report.append(f"restrictions are not functorial at {(r, s, t)}")
            if any(rs.obj[st.obj[a]] != rt.obj[a] for a in range(D.cat(t).n_objects)):
                report.append(f"restrictions are not functorial on objects at {(r, s, t)}")
    if D.nested and not report:
        try:
            nesting(D)
        except Refused as e:
            report.append(str(e))
    if D.compact and not report:
        report += _monoidal_report(D)
    return report


def bottom(S: FinSemilattice) -> int:
    b = S.top
    for s in range(S.n):
        b = S.meet(b, s)
    return b


def nesting(D: SemilatticeDiagram) -> tuple[list, list]:
    """(iota, home): iota[s][a] is the bottom-fiber object that object a of
    fiber(s) restricts to; home[A] is the greatest s whose fiber contains A."""
    S = D.S
    bot = bottom(S)
    iota = [D.restrict[(bot, s)].obj for s in range(S.n)]
    home = []
    for A in range(D.cat(bot).n_objects):
        having = [s for s in range(S.n) if A in iota[s]]
        greatest = [s for s in having if all(S.leq(t, s) for t in having)]
        if not greatest:
            raise Refused(f"object {A} has no greatest fiber containing it", A)
        home.append(greatest[0])
    return iota, home


def _monoidal_report(D: SemilatticeDiagram) -> list[str]:
    S = D.S
    report = []
    for (s, t), F in sorted(D.restrict.items()):
        if (s, t) not in D.psi:
            report.append(f"structure maps of restriction {(s, t)} missing")
            continue
        psi0, psi = D.psi[(s, t)]
        try:
            v = check_monoidal_functor(F, D.fibers[t], D.fibers[s], psi0, psi)
        except (StructureError, KeyError) as e:
            report.append(f"structure maps of restriction {(s, t)} are ill-typed: {e}")
            continue
        if not v:
            report.append(f"restriction {(s, t)} is not monoidal: {v.witness}")
    if report:
        return report
    # composites of restrictions must carry composite structure maps
    for r, s, t in product(range(S.n), repeat=3):
        if not (S.leq(r, s) and S.leq(s, t)):
            continue
        Fr = D.fibers[r]
        rs = D.restrict[(r, s)]
        p0s, ps = D.psi[(s, t)]
        p0r, pr = D.psi[(r, s)]
        p0, p = D.psi[(r, t)]
        if Fr.comp(rs.mor[p0s], p0r) != p0:
            report.append(f"unit structure maps do not compose at {(r, s, t)}")
        for a, b in ps:
            st = D.restrict[(s, t)].obj
            if Fr.comp(rs.mor[ps[(a, b)]], pr[(st[a], st[b])]) != p[(a, b)]:
                report.append(f"tensor structure maps do not compose at {(r, s, t)} on {(a, b)}")
                break
    return report


def check_diagram_morphism(m: DiagramMorphism, D: SemilatticeDiagram, E: SemilatticeDiagram) -> Verdict:
    """φ preserves top and meets; θ_s are dagger functors; squares commute."""
    S, T = D.S, E.S
    if len(m.phi) != S.n or len(m.theta) != S.n:
        raise StructureError("diagram morphism must give φ and θ at every element")
    if m.phi[S.top] != T.top:
        return Verdict(False, ("top",))
    for s, t in product(range(S.n), repeat=2):
        if m.phi[S.meet(s, t)] != T.meet(m.phi[s], m.phi[t]):
            return Verdict(False, ("meet", s, t))
    for s in range(S.n):
        v = check_functor(m.theta[s], D.cat(s), E.cat(m.phi[s]))
        if not v:
            return Verdict(False, ("theta", s, v.witness))
    for (s, t), F in sorted(D.restrict.items()):
        G = E.restrict[(m.phi[s], m.phi[t])]
        ts, tt = m.theta[s], m.theta[t]
        for a in range(D.cat(t).n_objects):
            if ts.obj[F.obj[a]] != G.obj[tt.obj[a]]:
                return Verdict(False, ("square", s, t, "object", a))
        for f in range(D.cat(t).n_morphisms):
            if ts.mor[F.mor[f]] != G.mor[tt.mor[f]]:
                return Verdict(False, ("square", s, t, "morphism", f))
    return Verdict(True)


# ------------------------------------------------------------ gluing

def tagged_morphisms(D: SemilatticeDiagram) -> list[tuple[int, int]]:
    """(s, f) pairs in the order used by the glued category: s-major, then
    (dom, cod), then fiber index."""
    out = []
    for s in range(D.S.n):
        C = D.cat(s)
        out += [(s, f) for f in sorted(range(C.n_morphisms), key=lambda f: (C.dom[f], C.cod[f], f))]
    return out


def compose_inverse_category(D: SemilatticeDiagram) -> DagCategory:
    """Hom-sets are tagged disjoint unions over S; g ∈ F(t) after f ∈ F(s) is
    F(s∧t ≤ t)(g) ∘ F(s∧t ≤ s)(f) in F(s∧t).  The identity of A comes from
    the greatest fiber containing A (the top fiber when objects are shared)."""
    if D.relaxed or D.padded:
        raise Refused("gluing needs fibers with shared objects")
    for s in range(D.S.n):
        if not is_groupoid(D.cat(s)):
            raise Refused(f"fiber {s} is not a groupoid", s)
    return _glue(D)


def _glue(D: SemilatticeDiagram) -> DagCategory:
    S = D.S
    iota, home = nesting(D)
    tags = tagged_morphisms(D)
    index = {tg: i for i, tg in enumerate(tags)}
    base = D.cat(bottom(S))
    dom = [iota[s][D.cat(s).dom[f]] for s, f in tags]
    cod = [iota[s][D.cat(s).cod[f]] for s, f in tags]
    out = {}
    for i, a in enumerate(dom):
        out.setdefault(a, []).append(i)
    compose = {}
    for i, (s, f) in enumerate(tags):
        for j in out.get(cod[i], ()):
            t, g = tags[j]
            u = S.meet(s, t)
            h = D.cat(u).comp(D.restrict[(u, t)].mor[g], D.restrict[(u, s)].mor[f])
            compose[(j, i)] = index[(u, h)]
    labels = [(S.base.elements[s], D.cat(s).labels[f]) for s, f in tags]
    identity = []
    for A, h in enumerate(home):
        identity.append(index[(h, D.cat(h).identity[iota[h].index(A)])])
    dagger = [index[(s, D.cat(s).dagger[f])] for s, f in tags]
    return DagCategory(base.objects, labels, dom, cod, identity, compose, dagger)


def diagram_morphism_to_functor(m: DiagramMorphism, D: SemilatticeDiagram, E: SemilatticeDiagram) -> Functor:
    """A ↦ θ_⊥(A) (θ_⊤ when objects are shared), (s, f) ↦ (φ(s), θ_s(f))
    between the glued categories."""
    v = check_diagram_morphism(m, D, E)
    if not v:
        raise Refused("not a diagram morphism", v.witness)
    tags_d = tagged_morphisms(D)
    index_e = {tg: i for i, tg in enumerate(tagged_morphisms(E))}
    bd, be = bottom(D.S), bottom(E.S)
    iota_e, _ = nesting(E)
    obj = [iota_e[m.phi[bd]][a] for a in m.theta[bd].obj]
    mor = [index_e[(m.phi[s], m.theta[s].mor[f])] for s, f in tags_d]
    return Functor(obj, mor)


# ------------------------------------------------------------ builders

def from_abgroup_diagram(A) -> SemilatticeDiagram:
    """An abelian-group diagram as a diagram of one-object groupoids."""
    fibers = []
    for G in A.fibers:
        inv = [next(y for y in range(G.n) if G.mul(x, y) == G.unit) for x in range(G.n)]
        fibers.append(from_monoid(G, inv))
    restrict = {k: Functor((0,), m) for k, m in A.restrict.items()}
    return SemilatticeDiagram(A.S, fibers, restrict)


def single_fiber(C) -> SemilatticeDiagram:
    """The one-point diagram on C (a DagCategory or CompactStructure)."""
    from .finalg import FinMonoid

    S = FinSemilattice(FinMonoid(("⊤",), 0, [[0]]))
    B = C.base if isinstance(C, CompactStructure) else C
    psi = {}
    if isinstance(C, CompactStructure):
        psi[(0, 0)] = (C.id(C.unit), {(a, b): C.id(C.to(a, b))
                                       for a, b in product(range(B.n_objects), repeat=2)})
    return SemilatticeDiagram(S, (C,), {(0, 0): identity_functor(B)}, psi)


# ------------------------------------------------------------ isomorphism

def _diagram_structure(D: SemilatticeDiagram) -> _iso.Structure:
    S = D.S
    n = S.n
    oo, om, k = [], [], n
    for s in range(n):
        C = D.cat(s)
        oo.append(k)
        k += C.n_objects
        om.append(k)
        k += C.n_morphisms
    colors = [("s", sum(S.leq(t, s) for t in range(n)), D.cat(s).n_objects, D.cat(s).n_morphisms)
              for s in range(n)]
    for s in range(n):
        sub = category_structure(D.cat(s))
        colors += [("fiber",) + tuple(c) if isinstance(c, tuple) else ("fiber", c) for c in sub.colors]
    st = _iso.Structure(colors)
    st.add("top", (), S.top)
    for s, t in product(range(n), repeat=2):
        st.add("meet", (s, t), S.meet(s, t))
    for s in range(n):
        C = D.cat(s)
        no = C.n_objects
        for a in range(no):
            st.add("in", (oo[s] + a,), s)
            st.add("id", (oo[s] + a,), om[s] + C.identity[a])
        for f in range(C.n_morphisms):
            st.add("in", (om[s] + f,), s)
            st.add("dom", (om[s] + f,), oo[s] + C.dom[f])
            st.add("cod", (om[s] + f,), oo[s] + C.cod[f])
            st.add("dag", (om[s] + f,), om[s] + C.dagger[f])
        for (g, f), h in C.compose.items():
            st.add("comp", (om[s] + g, om[s] + f), om[s] + h)
        F = D.fibers[s]
        if isinstance(F, CompactStructure):
            O, M = oo[s], om[s]
            st.add("unit", (s,), O + F.unit)
            for (a, b), c in F.tensor_obj.items():
                st.add("tobj", (O + a, O + b), O + c)
            for (f, g), h in F.tensor_mor.items():
                st.add("tmor", (M + f, M + g), M + h)
            for (a, b, c), m in F.assoc.items():
                st.add("assoc", (O + a, O + b, O + c), M + m)
            for (a, b), m in F.symm.items():
                st.add("symm", (O + a, O + b), M + m)
            for a in range(no):
                st.add("lunit", (O + a,), M + F.lunit[a])
                st.add("runit", (O + a,), M + F.runit[a])
                st.add("dual", (O + a,), O + F.dual[a])
                st.add("eta", (O + a,), M + F.eta[a])
    for (s, t), F in D.restrict.items():
        for a in range(D.cat(t).n_objects):
            st.add("ro", (oo[t] + a, s), oo[s] + F.obj[a])
        for f in range(D.cat(t).n_morphisms):
            st.add("rm", (om[t] + f, s), om[s] + F.mor[f])
    return st


def diagram_isomorphic(D: SemilatticeDiagram, E: SemilatticeDiagram) -> Verdict:
    """Isomorphism of diagrams (including compact structure when both carry
    it); the witness is a DiagramMorphism."""
    if D.S.n != E.S.n or D.compact != E.compact:
        return Verdict(False, detail="shapes differ")
    f = _iso.find_isomorphism(_diagram_structure(D), _diagram_structure(E))
    if f is None:
        return Verdict(False, detail="no isomorphism")
    n = D.S.n
    phi = tuple(f[:n])
    starts = {}
    k = n
    for s in range(n):
        C = E.cat(s)
        starts[s] = (k, k + C.n_objects)
        k += C.n_objects + C.n_morphisms
    theta, k = [], n
    for s in range(n):
        C = D.cat(s)
        oo, om = starts[phi[s]]
        obj = [f[k + a] - oo for a in range(C.n_objects)]
        k += C.n_objects
        mor = [f[k + g] - om for g in range(C.n_morphisms)]
        k += C.n_morphisms
        theta.append(Functor(obj, mor))
    return Verdict(True, DiagramMorphism(phi, tuple(theta)))
