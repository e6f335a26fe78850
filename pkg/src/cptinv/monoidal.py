"""Compact dagger structure on finite dagger categories.

Conventions, fixed once for every composite in this package:

* ``assoc[(A, B, C)]`` is α: (A⊗B)⊗C → A⊗(B⊗C); its inverse is its dagger.
* ``lunit[A]``: I⊗A → A, ``runit[A]``: A⊗I → A, ``symm[(A, B)]``: A⊗B → B⊗A.
* ``eta[A]``: I → A*⊗A, and the counit is derived, ε_A = η_A† ∘ σ_{A,A*}.
* snake:   λ_A ∘ (ε_A ⊗ id_A) ∘ α_{A,A*,A}† ∘ (id_A ⊗ η_A) ∘ ρ_A† = id_A
* scalar action:  s • f = λ_B ∘ (s ⊗ f) ∘ λ_A†
* trace:   Tr(f) = ε_A ∘ (f ⊗ id_{A*}) ∘ σ_{A*,A} ∘ η_A
* dual:    f* = ρ_{A*} ∘ (id ⊗ ε_B) ∘ (id ⊗ (f ⊗ id)) ∘ α_{A*,A,B*} ∘ (η_A ⊗ id) ∘ λ_{B*}†
* tr(f) = Tr(f)*, which needs I* = I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from . import _iso
from .errors import Refused, StructureError, Verdict
from .fincat import DagCategory, Functor, category_structure, is_groupoid, is_inverse_category, validate_category

COMPOSITE_ORDER = {
    "snake": "λ_A ∘ (ε_A⊗id_A) ∘ α_{A,A*,A}† ∘ (id_A⊗η_A) ∘ ρ_A†",
    "counit": "ε_A = η_A† ∘ σ_{A,A*}",
    "scalar_action": "s•f = λ_B ∘ (s⊗f) ∘ λ_A†",
    "trace": "Tr(f) = ε_A ∘ (f⊗id_{A*}) ∘ σ_{A*,A} ∘ η_A",
    "dual": "f* = ρ_{A*} ∘ (id_{A*}⊗ε_B) ∘ (id_{A*}⊗(f⊗id_{B*})) ∘ α_{A*,A,B*} ∘ (η_A⊗id_{B*}) ∘ λ_{B*}†",
    "small_trace": "tr(f) = Tr(f)*",
}


@dataclass(frozen=True, eq=False)
class CompactStructure:
    base: DagCategory
    unit: int
    tensor_obj: dict
    tensor_mor: dict
    assoc: dict
    lunit: tuple
    runit: tuple
    symm: dict
    dual: tuple
    eta: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        C = self.base
        for name in ("tensor_obj", "tensor_mor", "assoc", "symm", "meta"):
            object.__setattr__(self, name, dict(getattr(self, name)))
        for name in ("lunit", "runit", "dual", "eta"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        no, nm = C.n_objects, C.n_morphisms
        objs = range(no)
        if not 0 <= self.unit < no:
            raise StructureError("unit object out of range")
        for a, b in product(objs, objs):
            v = self.tensor_obj.get((a, b))
            if v is None or not 0 <= v < no:
                raise StructureError(f"tensor of objects {(a, b)} missing or out of range")
        for f, g in product(range(nm), range(nm)):
            h = self.tensor_mor.get((f, g))
            if h is None or not 0 <= h < nm:
                raise StructureError(f"tensor of morphisms {(f, g)} missing or out of range")
            if (C.dom[h], C.cod[h]) != (self.tensor_obj[(C.dom[f], C.dom[g])],
                                        self.tensor_obj[(C.cod[f], C.cod[g])]):
                raise StructureError(f"tensor of morphisms {(f, g)} has the wrong type")
        if len(self.lunit) != no or len(self.runit) != no or len(self.dual) != no or len(self.eta) != no:
            raise StructureError("lunit, runit, dual and eta need one entry per object")
        t, I = self.tensor_obj, self.unit
        self._typed("lunit", lambda a: self.lunit[a], lambda a: (t[(I, a)], a), objs)
        self._typed("runit", lambda a: self.runit[a], lambda a: (t[(a, I)], a), objs)
        self._typed("eta", lambda a: self.eta[a], lambda a: (I, t[(self.dual[a], a)]), objs)
        self._typed("assoc", lambda k: self.assoc.get(k), lambda k: (
            t[(t[(k[0], k[1])], k[2])], t[(k[0], t[(k[1], k[2])])]), product(objs, repeat=3))
        self._typed("symm", lambda k: self.symm.get(k), lambda k: (t[k], t[(k[1], k[0])]),
                    product(objs, repeat=2))

    def _typed(self, name, get, want, keys):
        C = self.base
        for k in keys:
            m = get(k)
            if m is None or not 0 <= m < C.n_morphisms:
                raise StructureError(f"{name} at {k} missing or out of range")
            if (C.dom[m], C.cod[m]) != want(k):
                raise StructureError(f"{name} at {k} has the wrong domain or codomain")

    # shorthand used throughout the package
    def to(self, a: int, b: int) -> int:
        return self.tensor_obj[(a, b)]

    def t(self, f: int, g: int) -> int:
        return self.tensor_mor[(f, g)]

    def comp(self, *fs: int) -> int:
        return self.base.comp(*fs)

    def dag(self, f: int) -> int:
        return self.base.dagger[f]

    def id(self, a: int) -> int:
        return self.base.identity[a]

    def eps(self, a: int) -> int:
        return self.comp(self.dag(self.eta[a]), self.symm[(a, self.dual[a])])

    @cached_property
    def scalars(self) -> tuple:
        return self.base.endos(self.unit)

    @cached_property
    def memo(self) -> dict:
        return {}

    @property
    def objects(self):
        return self.base.objects

    @property
    def labels(self):
        return self.base.labels


# ---------------------------------------------------------------- validation

def _tensor_functor(C: CompactStructure, rep: list) -> None:
    B = C.base
    lab = B.labels
    tm, comp, ident, dag = C.tensor_mor, B.compose, B.identity, B.dagger
    for a, b in product(range(B.n_objects), repeat=2):
        if tm[(ident[a], ident[b])] != ident[C.to(a, b)]:
            rep.append(f"id_{a} ⊗ id_{b} != id_{C.to(a, b)}")
    pairs = list(comp.items())
    for (g, f), gf in pairs:
        for (k, h), kh in pairs:
            if tm[(gf, kh)] != comp.get((tm[(g, k)], tm[(f, h)])):
                rep.append(f"interchange fails: ({lab[g]!r}∘{lab[f]!r})⊗({lab[k]!r}∘{lab[h]!r})")
    for f, g in product(range(B.n_morphisms), repeat=2):
        if tm[(dag[f], dag[g])] != dag[tm[(f, g)]]:
            rep.append(f"(f⊗g)† != f†⊗g† at ({lab[f]!r}, {lab[g]!r})")


def _naturality(C: CompactStructure, rep: list) -> None:
    B = C.base
    dom, cod, lab = B.dom, B.cod, B.labels
    nm = B.n_morphisms
    tm, comp, sy, al = C.tensor_mor, B.compose, C.symm, C.assoc
    I = C.id(C.unit)
    for f in range(nm):
        a, b = dom[f], cod[f]
        if C.comp(C.lunit[b], C.t(I, f)) != C.comp(f, C.lunit[a]):
            rep.append(f"λ not natural at {lab[f]!r}")
        if C.comp(C.runit[b], C.t(f, I)) != C.comp(f, C.runit[a]):
            rep.append(f"ρ not natural at {lab[f]!r}")
    for f, g in product(range(nm), repeat=2):
        lhs = comp[(sy[(cod[f], cod[g])], tm[(f, g)])]
        if lhs != comp[(tm[(g, f)], sy[(dom[f], dom[g])])]:
            rep.append(f"σ not natural at ({lab[f]!r}, {lab[g]!r})")
    for f, g in product(range(nm), repeat=2):
        fg = tm[(f, g)]
        cf, cg, df, dg = cod[f], cod[g], dom[f], dom[g]
        for h in range(nm):
            lhs = comp[(al[(cf, cg, cod[h])], tm[(fg, h)])]
            rhs = comp[(tm[(f, tm[(g, h)])], al[(df, dg, dom[h])])]
            if lhs != rhs:
                rep.append(f"α not natural at ({lab[f]!r}, {lab[g]!r}, {lab[h]!r})")


def pentagon_report(C: CompactStructure) -> list[str]:
    rep = []
    objs = range(C.base.n_objects)
    al, to, t, id_ = C.assoc, C.to, C.t, C.id
    for a, b, c, d in product(objs, repeat=4):
        lhs = C.comp(al[(a, b, to(c, d))], al[(to(a, b), c, d)])
        rhs = C.comp(t(id_(a), al[(b, c, d)]), al[(a, to(b, c), d)], t(al[(a, b, c)], id_(d)))
        if lhs != rhs:
            rep.append(f"pentagon fails at {(a, b, c, d)}")
    return rep


def _coherence(C: CompactStructure, rep: list, symmetric: bool = True) -> None:
    objs = range(C.base.n_objects)
    al, to, t, id_, I = C.assoc, C.to, C.t, C.id, C.unit
    rep.extend(pentagon_report(C))
    for a, b in product(objs, repeat=2):
        if C.comp(t(id_(a), C.lunit[b]), al[(a, I, b)]) != t(C.runit[a], id_(b)):
            rep.append(f"triangle fails at {(a, b)}")
    if not symmetric:
        return
    sy = C.symm
    for a, b in product(objs, repeat=2):
        if C.comp(sy[(b, a)], sy[(a, b)]) != id_(to(a, b)):
            rep.append(f"σ∘σ != id at {(a, b)}")
    for a, b, c in product(objs, repeat=3):
        lhs = C.comp(al[(b, c, a)], sy[(a, to(b, c))], al[(a, b, c)])
        rhs = C.comp(t(id_(b), sy[(a, c)]), al[(b, a, c)], t(sy[(a, b)], id_(c)))
        if lhs != rhs:
            rep.append(f"hexagon fails at {(a, b, c)}")


def _unitary(C: CompactStructure, rep: list) -> None:
    def check(name, key, m):
        B = C.base
        if C.comp(C.dag(m), m) != B.identity[B.dom[m]] or C.comp(m, C.dag(m)) != B.identity[B.cod[m]]:
            rep.append(f"{name}{key} is not unitary")
    for k, m in sorted(C.assoc.items()):
        check("α", k, m)
    for a in range(C.base.n_objects):
        check("λ", (a,), C.lunit[a])
        check("ρ", (a,), C.runit[a])
    for k, m in sorted(C.symm.items()):
        check("σ", k, m)


def snake(C: CompactStructure, a: int) -> int:
    d = C.dual[a]
    return C.comp(C.lunit[a], C.t(C.eps(a), C.id(a)), C.dag(C.assoc[(a, d, a)]),
                  C.t(C.id(a), C.eta[a]), C.dag(C.runit[a]))


def validate_compact(C: CompactStructure, symmetric: bool = True) -> list[str]:
    """Every violated law of a compact dagger category, instance by instance.
    The report is memoised on the structure, which is immutable."""
    key = ("validate_compact", symmetric)
    if key not in C.memo:
        C.memo[key] = _validate_compact(C, symmetric)
    return list(C.memo[key])


def _validate_compact(C: CompactStructure, symmetric: bool) -> list[str]:
    rep = validate_category(C.base)
    if rep:
        return rep
    _tensor_functor(C, rep)
    _naturality(C, rep)
    _coherence(C, rep, symmetric=symmetric)
    _unitary(C, rep)
    if symmetric:
        for a in range(C.base.n_objects):
            if snake(C, a) != C.id(a):
                rep.append(f"snake equation fails at object {a} ({C.objects[a]!r})")
    return rep


# ------------------------------------------------------ scalars and traces

def _require_scalar(C: CompactStructure, s: int) -> None:
    B = C.base
    if B.dom[s] != C.unit or B.cod[s] != C.unit:
        raise TypeError(f"{B.labels[s]!r} is not a scalar")


def scalar_mult(C: CompactStructure, s: int, f: int) -> int:
    key = ("smul", s, f)
    if key not in C.memo:
        _require_scalar(C, s)
        B = C.base
        C.memo[key] = C.comp(C.lunit[B.cod[f]], C.t(s, f), C.dag(C.lunit[B.dom[f]]))
    return C.memo[key]


def trace_big(C: CompactStructure, f: int) -> int:
    key = ("Tr", f)
    if key not in C.memo:
        B = C.base
        a = B.dom[f]
        if B.cod[f] != a:
            raise TypeError(f"{B.labels[f]!r} is not an endomorphism")
        da = C.dual[a]
        C.memo[key] = C.comp(C.eps(a), C.t(f, C.id(da)), C.symm[(da, a)], C.eta[a])
    return C.memo[key]


def dual_morphism(C: CompactStructure, f: int) -> int:
    key = ("dual", f)
    if key not in C.memo:
        B = C.base
        a, b = B.dom[f], B.cod[f]
        da, db = C.dual[a], C.dual[b]
        C.memo[key] = C.comp(
            C.runit[da],
            C.t(C.id(da), C.eps(b)),
            C.t(C.id(da), C.t(f, C.id(db))),
            C.assoc[(da, a, db)],
            C.t(C.eta[a], C.id(db)),
            C.dag(C.lunit[db]),
        )
    return C.memo[key]


def trace_small(C: CompactStructure, f: int) -> int:
    if C.dual[C.unit] != C.unit:
        raise StructureError("tr(f) = Tr(f)* is a scalar only when I* = I")
    return dual_morphism(C, trace_big(C, f))


def dimension(C: CompactStructure, a: int) -> int:
    return trace_small(C, C.id(a))


def is_idempotent_scalar(C: CompactStructure, s: int) -> bool:
    return C.comp(s, C.dag(s)) == s


def restriction_idempotent(C: CompactStructure, f: int) -> int:
    """tr(f f†) • id_{dom f}."""
    return scalar_mult(C, trace_small(C, C.comp(f, C.dag(f))), C.id(C.base.dom[f]))


# ------------------------------------------------------------ characterisations

def endo_collapse_check(C: CompactStructure, diagnostic: bool = False) -> Verdict:
    """Does every endomorphism f equal tr(f) • id?

    Without ``diagnostic`` the input must be an inverse category.
    """
    if not diagnostic:
        inv = is_inverse_category(C.base)
        if not inv:
            raise Refused("endomorphism collapse is stated for inverse categories", inv.witness)
    B = C.base
    for a in range(B.n_objects):
        for f in B.endos(a):
            if scalar_mult(C, trace_small(C, f), C.id(a)) != f:
                return Verdict(False, f, f"{B.labels[f]!r} != tr(f)•id")
    return Verdict(True)


def compact_inverse_check(C: CompactStructure) -> Verdict:
    """f = tr(f f†) • f for every f, with restriction-category cross-checks."""
    B = C.base
    d = C.dag
    for f in range(B.n_morphisms):
        s = trace_small(C, C.comp(f, d(f)))
        if scalar_mult(C, s, f) != f:
            return Verdict(False, f, f"{B.labels[f]!r} != tr(ff†)•f")
    notes = []
    bar = [restriction_idempotent(C, f) for f in range(B.n_morphisms)]
    out = B._outgoing
    for f in range(B.n_morphisms):
        if C.comp(f, bar[f]) != f:
            notes.append(f"f∘f̄ != f at {B.labels[f]!r}")
        s = trace_small(C, C.comp(f, d(f)))
        if C.comp(d(s), s) != s:
            notes.append(f"tr(ff†)†∘tr(ff†) != tr(ff†) at {B.labels[f]!r}")
        for g in out[B.dom[f]]:
            if C.comp(bar[f], bar[g]) != C.comp(bar[g], bar[f]):
                notes.append(f"f̄ḡ != ḡf̄ at ({B.labels[f]!r}, {B.labels[g]!r})")
            if bar[C.comp(g, bar[f])] != C.comp(bar[g], bar[f]):
                notes.append(f"bar(g f̄) != ḡ f̄ at ({B.labels[f]!r}, {B.labels[g]!r})")
        for g in out[B.cod[f]]:
            if C.comp(bar[g], f) != C.comp(f, bar[C.comp(g, f)]):
                notes.append(f"ḡ f != f bar(g f) at ({B.labels[f]!r}, {B.labels[g]!r})")
    if notes:
        return Verdict(False, None, "restriction cross-check failed", {"restriction": notes})
    return Verdict(True, extra={"restriction": []})


def compact_groupoid_check(C: CompactStructure) -> Verdict:
    """Compact inverse with every scalar unitary; also reports is_groupoid."""
    gp = is_groupoid(C.base)
    ci = compact_inverse_check(C)
    if not ci:
        return Verdict(False, ci.witness, "not compact inverse: " + ci.detail, {"is_groupoid": gp.ok})
    one = C.id(C.unit)
    for s in C.scalars:
        if C.comp(C.dag(s), s) != one or C.comp(s, C.dag(s)) != one:
            return Verdict(False, s, f"scalar {C.labels[s]!r} is not invertible", {"is_groupoid": gp.ok})
    return Verdict(True, extra={"is_groupoid": gp.ok})


def idempotent_scalars(C: CompactStructure) -> tuple:
    return tuple(s for s in C.scalars if is_idempotent_scalar(C, s))


# ------------------------------------------------------------ subunits

@dataclass(frozen=True)
class SubunitClass:
    members: tuple
    idempotent: int


def subunits(C: CompactStructure) -> list[SubunitClass]:
    """Isometries r: R → I grouped into subobjects, each tagged with r r†."""
    B = C.base
    iso = [r for r in range(B.n_morphisms)
           if B.cod[r] == C.unit and C.comp(C.dag(r), r) == C.id(B.dom[r])]
    classes: list[list[int]] = []
    for r in iso:
        for cls in classes:
            r0 = cls[0]
            if _factor_through(C, r, r0, unitary=True) is not None:
                cls.append(r)
                break
        else:
            classes.append([r])
    return [SubunitClass(tuple(c), C.comp(c[0], C.dag(c[0]))) for c in classes]


def _factor_through(C: CompactStructure, r: int, r0: int, unitary: bool) -> int | None:
    B = C.base
    for u in B.hom(B.dom[r], B.dom[r0]):
        if C.comp(r0, u) != r:
            continue
        if unitary and (C.comp(C.dag(u), u) != C.id(B.dom[r]) or C.comp(u, C.dag(u)) != C.id(B.dom[r0])):
            continue
        return u
    return None


def subunit_order_check(C: CompactStructure) -> Verdict:
    """Classes ↔ idempotent scalars is a bijection preserving and reflecting order."""
    classes = subunits(C)
    tags = [c.idempotent for c in classes]
    target = sorted(idempotent_scalars(C))
    if sorted(tags) != target:
        return Verdict(False, (tags, target), "subunit classes do not biject with idempotent scalars")
    for c1, c2 in product(classes, repeat=2):
        below = _factor_through(C, c1.members[0], c2.members[0], unitary=False) is not None
        meet = C.comp(c1.idempotent, c2.idempotent) == c1.idempotent
        if below != meet:
            return Verdict(False, (c1.members[0], c2.members[0]), "order not preserved")
    return Verdict(True, extra={"classes": len(classes)})


# ------------------------------------------------------------ strict one-object case

def one_object(M, dagger=None, obj="I") -> CompactStructure:
    """A commutative monoid as a strict one-object compact category."""
    from .fincat import from_monoid

    if not M.is_commutative:
        raise Refused("a one-object compact category needs a commutative monoid")
    B = from_monoid(M, dagger, obj)
    n = M.n
    u = M.unit
    return CompactStructure(
        B, 0, {(0, 0): 0}, {(f, g): M.mul(f, g) for f in range(n) for g in range(n)},
        {(0, 0, 0): u}, (u,), (u,), {(0, 0): u}, (0,), (u,),
    )


# ------------------------------------------------------------ isomorphism

def compact_structure_facts(C: CompactStructure) -> _iso.Structure:
    B = C.base
    S = category_structure(B)
    no = B.n_objects
    S.add("unit", (), C.unit)
    for (a, b), c in C.tensor_obj.items():
        S.add("tobj", (a, b), c)
    for (f, g), h in C.tensor_mor.items():
        S.add("tmor", (no + f, no + g), no + h)
    for k, m in C.assoc.items():
        S.add("assoc", k, no + m)
    for k, m in C.symm.items():
        S.add("symm", k, no + m)
    for a in range(no):
        S.add("lunit", (a,), no + C.lunit[a])
        S.add("runit", (a,), no + C.runit[a])
        S.add("dual", (a,), C.dual[a])
        S.add("eta", (a,), no + C.eta[a])
    return S


def compact_isomorphic(C: CompactStructure, D: CompactStructure) -> Verdict:
    """Search for a strict isomorphism of compact dagger structures."""
    if (C.base.n_objects, C.base.n_morphisms) != (D.base.n_objects, D.base.n_morphisms):
        return Verdict(False, detail="sizes differ")
    f = _iso.find_isomorphism(compact_structure_facts(C), compact_structure_facts(D))
    if f is None:
        return Verdict(False, detail="no isomorphism")
    no = C.base.n_objects
    return Verdict(True, Functor(f[:no], [x - no for x in f[no:]]))


def check_monoidal_functor(F: Functor, C: CompactStructure, D: CompactStructure,
                           psi0: int, psi: dict) -> Verdict:
    """Strong monoidal dagger functor with ψ0: I_D → F(I) and
    ψ_{A,B}: F(A) ⊗ F(B) → F(A⊗B), all unitary and natural."""
    from .fincat import check_functor

    base = check_functor(F, C.base, D.base)
    if not base:
        return base
    CB, DB = C.base, D.base
    if DB.dom[psi0] != D.unit or DB.cod[psi0] != F.obj[C.unit]:
        raise StructureError("ψ0 has the wrong type")
    for (a, b) in product(range(CB.n_objects), repeat=2):
        p = psi[(a, b)]
        if (DB.dom[p], DB.cod[p]) != (D.to(F.obj[a], F.obj[b]), F.obj[C.to(a, b)]):
            raise StructureError(f"ψ at {(a, b)} has the wrong type")
    unitary = [psi0] + [psi[k] for k in sorted(psi)]
    for p in unitary:
        if D.comp(D.dag(p), p) != D.id(DB.dom[p]) or D.comp(p, D.dag(p)) != D.id(DB.cod[p]):
            return Verdict(False, ("ψ not unitary", p))
    fm = F.mor
    for f, g in product(range(CB.n_morphisms), repeat=2):
        lhs = D.comp(psi[(CB.cod[f], CB.cod[g])], D.t(fm[f], fm[g]))
        rhs = D.comp(fm[C.t(f, g)], psi[(CB.dom[f], CB.dom[g])])
        if lhs != rhs:
            return Verdict(False, ("ψ not natural", f, g))
    objs = range(CB.n_objects)
    for a, b, c in product(objs, repeat=3):
        fa, fb, fc = F.obj[a], F.obj[b], F.obj[c]
        lhs = D.comp(fm[C.assoc[(a, b, c)]], psi[(C.to(a, b), c)], D.t(psi[(a, b)], D.id(fc)))
        rhs = D.comp(psi[(a, C.to(b, c))], D.t(D.id(fa), psi[(b, c)]), D.assoc[(fa, fb, fc)])
        if lhs != rhs:
            return Verdict(False, ("associativity coherence", a, b, c))
    for a in objs:
        fa = F.obj[a]
        lhs = D.comp(fm[C.lunit[a]], psi[(C.unit, a)], D.t(psi0, D.id(fa)))
        if lhs != D.lunit[fa]:
            return Verdict(False, ("left unit coherence", a))
        rhs = D.comp(fm[C.runit[a]], psi[(a, C.unit)], D.t(D.id(fa), psi0))
        if rhs != D.runit[fa]:
            return Verdict(False, ("right unit coherence", a))
    for a, b in product(objs, repeat=2):
        fa, fb = F.obj[a], F.obj[b]
        lhs = D.comp(fm[C.symm[(a, b)]], psi[(a, b)])
        rhs = D.comp(psi[(b, a)], D.symm[(fa, fb)])
        if lhs != rhs:
            return Verdict(False, ("symmetry coherence", a, b))
    return Verdict(True)


def strict_psi(F: Functor, C: CompactStructure, D: CompactStructure) -> tuple[int, dict]:
    """Identity structure maps, for functors that preserve ⊗ and I on the nose."""
    psi0 = D.id(D.unit)
    psi = {}
    for a, b in product(range(C.base.n_objects), repeat=2):
        src = D.to(F.obj[a], F.obj[b])
        if src != F.obj[C.to(a, b)]:
            raise Refused("functor does not preserve ⊗ on objects strictly", (a, b))
        psi[(a, b)] = D.id(src)
    if F.obj[C.unit] != D.unit:
        raise Refused("functor does not preserve the unit strictly", C.unit)
    return psi0, psi


def relabel_compact(C: CompactStructure, order) -> CompactStructure:
    """Reorder morphisms so that new morphism i is old morphism ``order[i]``."""
    from .fincat import relabel_category

    pos = {old: new for new, old in enumerate(order)}
    return CompactStructure(
        relabel_category(C.base, order), C.unit, C.tensor_obj,
        {(pos[f], pos[g]): pos[h] for (f, g), h in C.tensor_mor.items()},
        {k: pos[m] for k, m in C.assoc.items()},
        [pos[m] for m in C.lunit], [pos[m] for m in C.runit],
        {k: pos[m] for k, m in C.symm.items()}, C.dual, [pos[m] for m in C.eta], C.meta,
    )


def compact_tables_equal(C: CompactStructure, D: CompactStructure) -> bool:
    """Same category tables and same monoidal tables (labels ignored)."""
    from .fincat import tables_equal

    return (tables_equal(C.base, D.base) and C.unit == D.unit and C.tensor_obj == D.tensor_obj
            and C.tensor_mor == D.tensor_mor and C.assoc == D.assoc and C.lunit == D.lunit
            and C.runit == D.runit and C.symm == D.symm and C.dual == D.dual and C.eta == D.eta)
