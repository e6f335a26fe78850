"""Compact groupoids as cocycle data: the group G of object classes, the
abelian group H of scalars, the action of G on H and the 3-cocycle read off
the associator of a skeletal, unit-strict model.

Normalization: λ, ρ and η are made identities (ε = σ_{A,A*} then), so ω is
unital in each argument; ω(A, B, C) is the scalar h with α_{A,B,C} = h•id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import Refused, StructureError, Verdict
from .finalg import FinMonoid
from .fincat import DagCategory, Functor, is_groupoid
from .monoidal import CompactStructure, check_monoidal_functor, scalar_mult, trace_big, validate_compact

NORMALIZATION = "strict units: λ = ρ = η = id, ω(e, -, -) = ω(-, e, -) = ω(-, -, e) = unit"


@dataclass(frozen=True, eq=False)
class CocycleData:
    """``action[g][h]`` is g▷h and ``omega[a][b][c]`` an element of H, all
    as indices."""

    G: FinMonoid
    H: FinMonoid
    action: tuple
    omega: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        try:
            object.__setattr__(self, "action", tuple(tuple(r) for r in self.action))
            object.__setattr__(self, "omega", tuple(tuple(tuple(r) for r in m) for m in self.omega))
        except TypeError as e:
            raise StructureError(f"action and omega must be nested tables: {e}") from None
        ng, nh = self.G.n, self.H.n
        if len(self.action) != ng or any(len(r) != nh or any(not 0 <= v < nh for v in r)
                                         for r in self.action):
            raise StructureError("action must be a |G| x |H| table of H indices")
        if len(self.omega) != ng or any(len(m) != ng or any(len(r) != ng or any(
                not 0 <= v < nh for v in r) for r in m) for m in self.omega):
            raise StructureError("omega must be a |G|^3 table of H indices")

    @property
    def is_abelian(self) -> bool:
        return self.G.is_commutative

    def key(self) -> tuple:
        """Everything that equality of cocycle data compares (labels aside)."""
        return (self.G.unit, self.G.table, self.H.unit, self.H.table, self.action, self.omega)


def data_equal(d1: CocycleData, d2: CocycleData) -> bool:
    return d1.key() == d2.key()


def trivial_action(G: FinMonoid, H: FinMonoid) -> tuple:
    return tuple(tuple(range(H.n)) for _ in range(G.n))


def trivial_cocycle(G: FinMonoid, H: FinMonoid) -> tuple:
    return tuple(tuple(tuple(H.unit for _ in range(G.n)) for _ in range(G.n)) for _ in range(G.n))


# ------------------------------------------------------------ group helpers

def _inverses(M: FinMonoid) -> list | None:
    inv = []
    for a in range(M.n):
        found = [b for b in range(M.n) if M.mul(a, b) == M.unit and M.mul(b, a) == M.unit]
        if not found:
            return None
        inv.append(found[0])
    return inv


def _group_report(d: CocycleData) -> list[str]:
    G, H = d.G, d.H
    out = []
    if _inverses(G) is None:
        out.append("G is not a group")
    if _inverses(H) is None:
        out.append("H is not a group")
    if not H.is_commutative:
        out.append("H is not abelian")
    act = d.action
    if act[G.unit] != tuple(range(H.n)):
        out.append("the unit of G does not act trivially")
    for g in range(G.n):
        if sorted(act[g]) != list(range(H.n)):
            out.append(f"g = {G.elements[g]!r} does not act bijectively")
        elif any(act[g][H.mul(x, y)] != H.mul(act[g][x], act[g][y]) for x in range(H.n) for y in range(H.n)):
            out.append(f"g = {G.elements[g]!r} does not act by a homomorphism")
    for g, k in product(range(G.n), repeat=2):
        if any(act[G.mul(g, k)][h] != act[g][act[k][h]] for h in range(H.n)):
            out.append(f"action is not compatible with the product at {(g, k)}")
    return out


_GROUP_REPORTS: dict = {}


def _cached_group_report(d: CocycleData) -> list[str]:
    key = (d.G.unit, d.G.table, d.H.unit, d.H.table, d.action)
    if key not in _GROUP_REPORTS:
        _GROUP_REPORTS[key] = _group_report(d)
    return _GROUP_REPORTS[key]


def verify_cocycle(d: CocycleData) -> Verdict:
    """Normalized 3-cocycle identity on all of G⁴:
    a▷ω(b,c,d) · ω(a,bc,d) · ω(a,b,c) = ω(ab,c,d) · ω(a,b,cd)."""
    problems = _cached_group_report(d)
    if problems:
        return Verdict(False, None, problems[0], {"problems": problems})
    G, H, w, act = d.G, d.H, d.omega, d.action
    e, u = G.unit, H.unit
    n = G.n
    for a, b in product(range(n), repeat=2):
        if w[e][a][b] != u or w[a][e][b] != u or w[a][b][e] != u:
            return Verdict(False, (a, b), "omega is not normalized")
    m, mul = H.table, G.table
    for a in range(n):
        wa, acta, mula = w[a], act[a], mul[a]
        for b in range(n):
            wab, wmab, mulb = wa[b], w[mula[b]], mul[b]
            for c in range(n):
                wbc, wabc, wmabc, ab_c = w[b][c], wab[c], wmab[c], wa[mulb[c]]
                for dd in range(n):
                    lhs = m[m[acta[wbc[dd]]][ab_c[dd]]][wabc]
                    if lhs != m[wmabc[dd]][wab[mul[c][dd]]]:
                        return Verdict(False, (a, b, c, dd), "cocycle identity fails")
    return Verdict(True)


# ------------------------------------------------------------ reconstruction

def reconstruct(d: CocycleData, symmetry: dict | None = None) -> CompactStructure:
    """Skeletal groupoid with objects G, Aut(g) = {(g, h)}, (g,h)⊗(g',h') =
    (gg', h·(g▷h')), α = ω•id and identity unitors and units.

    The symmetry is strict (σ = id) unless ``symmetry[(a, b)]`` gives its
    scalar coefficients; ``meta["symmetric"]`` records whether the hexagon,
    σσ = id and snake laws then hold (they are the only laws that can fail).
    """
    v = verify_cocycle(d)
    if not v:
        raise Refused("not a normalized 3-cocycle: " + v.detail, v.witness)
    G, H = d.G, d.H
    if not G.is_commutative:
        raise Refused("a symmetric tensor needs an abelian group of objects")
    base, tobj, tmor, ident, ginv = _template(G, H, d.action)
    nh, w = H.n, d.omega
    objs = range(G.n)
    assoc = {(a, b, c): G.prod(a, b, c) * nh + w[a][b][c] for a in objs for b in objs for c in objs}
    coeff = symmetry or {}
    symm = {(a, b): G.mul(a, b) * nh + coeff.get((a, b), H.unit) for a in objs for b in objs}
    ok = not symmetry_report(d, {k: coeff.get(k, H.unit) for k in symm})
    return CompactStructure(base, G.unit, tobj, tmor, assoc, ident, ident, symm, ginv,
                            [G.unit * nh + H.unit] * G.n,
                            meta={"symmetry": "given" if symmetry else "strict", "symmetric": ok,
                                  "normalization": NORMALIZATION})


_TEMPLATES: dict = {}


def _template(G: FinMonoid, H: FinMonoid, act: tuple):
    """The parts of a reconstruction that do not depend on ω (shared, never
    mutated).  Morphism (g, h) has index g·|H| + h."""
    key = (G.elements, G.table, G.unit, H.elements, H.table, H.unit, act)
    if key in _TEMPLATES:
        return _TEMPLATES[key]
    ng, nh = G.n, H.n
    hinv = _inverses(H)

    def m(g, h):
        return g * nh + h

    base = DagCategory(
        G.elements, [(x, y) for x in G.elements for y in H.elements],
        [g for g in range(ng) for _ in range(nh)], [g for g in range(ng) for _ in range(nh)],
        [m(g, H.unit) for g in range(ng)],
        {(m(g, h), m(g, k)): m(g, H.mul(h, k)) for g in range(ng) for h in range(nh) for k in range(nh)},
        [m(g, hinv[h]) for g in range(ng) for h in range(nh)],
    )
    objs = range(ng)
    tobj = {(a, b): G.mul(a, b) for a in objs for b in objs}
    tmor = {(m(a, h), m(b, k)): m(G.mul(a, b), H.mul(h, act[a][k]))
            for a in objs for h in range(nh) for b in objs for k in range(nh)}
    out = (base, tobj, tmor, [m(g, H.unit) for g in objs], _inverses(G))
    _TEMPLATES[key] = out
    return out


def symmetry_report(d: CocycleData, c: dict) -> list[str]:
    """Laws a scalar symmetry σ_{a,b} = c(a,b)•id must satisfy on the
    reconstructed groupoid: naturality (trivial action), σσ = id, the
    hexagon and the snake equation with η = id."""
    G, H, w, act = d.G, d.H, d.omega, d.action
    m = H.mul
    out = []
    if act != trivial_action(G, H):
        out.append("σ is natural only for the trivial action")
    ginv = _inverses(G)
    for a, b in product(range(G.n), repeat=2):
        if m(c[(a, b)], c[(b, a)]) != H.unit:
            out.append(f"σσ != id at {(a, b)}")
    for a, b, cc in product(range(G.n), repeat=3):
        lhs = m(m(w[b][cc][a], c[(a, G.mul(b, cc))]), w[a][b][cc])
        rhs = m(m(act[b][c[(a, cc)]], w[b][a][cc]), c[(a, b)])
        if lhs != rhs:
            out.append(f"hexagon fails at {(a, b, cc)}")
    for a in range(G.n):
        if c[(a, ginv[a])] != w[a][ginv[a]][a]:
            out.append(f"snake equation fails at {a}")
    return out


def find_symmetry(d: CocycleData, budget: int = 1_000_000) -> Verdict:
    """Exhaustive search for scalar coefficients c making the reconstructed
    groupoid symmetric; the first solution in lexicographic order, or a
    proof of absence."""
    G, H = d.G, d.H
    pairs = [(a, b) for a in range(G.n) for b in range(G.n) if a <= b]
    if H.n ** len(pairs) > budget:
        raise Refused("undecided at desk scale", H.n ** len(pairs))
    for vals in product(range(H.n), repeat=len(pairs)):
        hinv = _inverses(H)
        c = {}
        for (a, b), v in zip(pairs, vals):
            c[(a, b)] = v
            c[(b, a)] = hinv[v] if a != b else v
        if not symmetry_report(d, c):
            return Verdict(True, c)
    return Verdict(False, None, "no symmetry on the reconstructed groupoid",
                   {"candidates": H.n ** len(pairs)})


# ------------------------------------------------------------ skeleton and strict units

def _require_groupoid(C: CompactStructure, symmetric: bool) -> None:
    problems = validate_compact(C, symmetric=symmetric)
    if problems:
        raise Refused("not a compact dagger category: " + problems[0], problems)
    gp = is_groupoid(C.base)
    if not gp:
        raise Refused("not a groupoid", gp.witness)
    B = C.base
    for f in range(B.n_morphisms):
        if C.comp(C.dag(f), f) != C.id(B.dom[f]):
            raise Refused("the dagger is not the inverse", f)


def is_skeletal(C: CompactStructure) -> bool:
    B = C.base
    return all(not B.hom(a, b) for a in range(B.n_objects) for b in range(B.n_objects) if a != b)


def transport(C: CompactStructure, reps: list, u: list) -> tuple[CompactStructure, dict]:
    """Full subcategory on ``reps`` with the structure moved along unitaries
    u[A]: A → rep(A).  Returns the skeleton-like category and the witness
    {"inclusion", "retraction", "psi0", "psi"} (retraction is monoidal with
    structure maps psi0, psi)."""
    B = C.base
    rep_of = [reps.index(B.cod[u[a]]) for a in range(B.n_objects)]
    keep = [f for f in range(B.n_morphisms) if B.dom[f] in reps and B.cod[f] in reps]
    pos = {f: i for i, f in enumerate(keep)}
    opos = {a: i for i, a in enumerate(reps)}
    K = DagCategory(
        [B.objects[a] for a in reps], [B.labels[f] for f in keep],
        [opos[B.dom[f]] for f in keep], [opos[B.cod[f]] for f in keep],
        [pos[B.identity[a]] for a in reps],
        {(pos[g], pos[f]): pos[h] for (g, f), h in B.compose.items() if g in pos and f in pos},
        [pos[B.dagger[f]] for f in keep],
    )

    def R(f):
        """u_cod ∘ f ∘ u_dom† as a morphism of the skeleton."""
        return pos[C.comp(u[B.cod[f]], f, C.dag(u[B.dom[f]]))]

    objs = range(len(reps))
    r = reps
    tobj = {(a, b): rep_of[C.to(r[a], r[b])] for a in objs for b in objs}
    tmor = {(pos[f], pos[g]): R(C.t(f, g)) for f in keep for g in keep}
    I = rep_of[C.unit]
    uI = u[C.unit]
    assoc = {}
    for a, b, c in product(objs, repeat=3):
        A, Bo, Co = r[a], r[b], r[c]
        ab, bc = C.to(A, Bo), C.to(Bo, Co)
        inner = C.comp(C.t(C.id(A), u[bc]), C.assoc[(A, Bo, Co)], C.dag(C.t(u[ab], C.id(Co))))
        assoc[(a, b, c)] = R(inner)
    lunit = [R(C.comp(C.lunit[r[a]], C.dag(C.t(uI, C.id(r[a]))))) for a in objs]
    runit = [R(C.comp(C.runit[r[a]], C.dag(C.t(C.id(r[a]), uI)))) for a in objs]
    symm = {(a, b): R(C.symm[(r[a], r[b])]) for a in objs for b in objs}
    dual = [rep_of[C.dual[r[a]]] for a in objs]
    eta = [R(C.comp(C.t(u[C.dual[r[a]]], C.id(r[a])), C.eta[r[a]], C.dag(uI))) for a in objs]
    Ksk = CompactStructure(K, I, tobj, tmor, assoc, lunit, runit, symm, dual, eta, meta=dict(C.meta))
    retraction = Functor(rep_of, [R(f) for f in range(B.n_morphisms)])
    inclusion = Functor(reps, keep)
    psi = {}
    for a, b in product(range(B.n_objects), repeat=2):
        # R(A) ⊗ R(B) → R(A ⊗ B)
        psi[(a, b)] = R(C.dag(C.t(u[a], u[b])))
    psi0 = pos[C.comp(uI, C.dag(u[r[I]]))] if r[I] != C.unit else Ksk.id(I)
    return Ksk, {"inclusion": inclusion, "retraction": retraction, "psi0": psi0, "psi": psi}


def skeletalize(C: CompactStructure, check: bool = True) -> tuple[CompactStructure, dict]:
    """One object per isomorphism class (the least index), structure
    transported along the first unitary into the representative."""
    if check:
        _require_groupoid(C, symmetric=True)
    B = C.base
    reps, u = [], []
    for a in range(B.n_objects):
        for r in reps:
            if B.hom(a, r):
                u.append(B.hom(a, r)[0])
                break
        else:
            reps.append(a)
            u.append(B.identity[a])
    if len(reps) == B.n_objects:
        return C, {"inclusion": Functor(range(B.n_objects), range(B.n_morphisms)),
                   "retraction": Functor(range(B.n_objects), range(B.n_morphisms)),
                   "psi0": C.id(C.unit),
                   "psi": {(a, b): C.id(C.to(a, b)) for a in range(B.n_objects) for b in range(B.n_objects)}}
    return transport(C, reps, u)


def retwist(C: CompactStructure, theta: dict, eta_scale: dict | None = None) -> CompactStructure:
    """Same objects, tensor f ⊗' g = θ_{B,B'} ∘ (f ⊗ g) ∘ θ_{A,A'}† for
    automorphisms θ_{A,B} of A ⊗ B, with the coherence maps moved to match;
    η_A is further composed with the scalar ``eta_scale[A]``."""
    B = C.base
    objs = range(B.n_objects)
    th = {k: theta.get(k, C.id(C.to(*k))) for k in product(objs, repeat=2)}
    tmor = {(f, g): C.comp(th[(B.cod[f], B.cod[g])], C.t(f, g), C.dag(th[(B.dom[f], B.dom[g])]))
            for f in range(B.n_morphisms) for g in range(B.n_morphisms)}
    to, I = C.to, C.unit
    assoc = {(a, b, c): C.comp(th[(a, to(b, c))], C.t(C.id(a), th[(b, c)]), C.assoc[(a, b, c)],
                               C.dag(C.t(th[(a, b)], C.id(c))), C.dag(th[(to(a, b), c)]))
             for a, b, c in product(objs, repeat=3)}
    lunit = [C.comp(C.lunit[a], C.dag(th[(I, a)])) for a in objs]
    runit = [C.comp(C.runit[a], C.dag(th[(a, I)])) for a in objs]
    symm = {(a, b): C.comp(th[(b, a)], C.symm[(a, b)], C.dag(th[(a, b)])) for a, b in product(objs, repeat=2)}
    scale = eta_scale or {}
    eta = [C.comp(th[(C.dual[a], a)], C.eta[a], scale.get(a, C.id(I))) for a in objs]
    return CompactStructure(B, I, C.tensor_obj, tmor, assoc, lunit, runit, symm, C.dual, eta, meta=dict(C.meta))


def strictify_units(C: CompactStructure, check: bool = True) -> tuple[CompactStructure, dict]:
    """Skeletal input; returns a retwisted copy with λ = ρ = η = id and the
    witness (the identity functor with structure maps θ)."""
    if check and not is_skeletal(C):
        raise Refused("strictify_units needs a skeletal category")
    B = C.base
    objs = range(B.n_objects)
    I = C.unit
    one = C.id(I)
    if all(C.lunit[a] == C.id(a) and C.runit[a] == C.id(a) for a in objs) and all(e == one for e in C.eta):
        return C, {"functor": Functor(objs, range(B.n_morphisms)), "psi0": one,
                   "psi": {(a, b): C.id(C.to(a, b)) for a in objs for b in objs}}
    theta = {}
    for a in objs:
        theta[(I, a)] = C.lunit[a]
        theta[(a, I)] = C.runit[a]
    D = retwist(C, theta)
    # η' is an automorphism of I (A*⊗A is I in a skeleton); rescale it away
    scale = {a: C.dag(D.eta[a]) for a in objs}
    E = retwist(C, theta, scale)
    psi = {(a, b): C.dag(theta.get((a, b), C.id(C.to(a, b)))) for a in objs for b in objs}
    return E, {"functor": Functor(objs, range(B.n_morphisms)), "psi0": one, "psi": psi}


def check_equivalence_witness(C: CompactStructure, K: CompactStructure, w: dict) -> Verdict:
    """The retraction C → K of ``skeletalize`` is a monoidal dagger functor."""
    return check_monoidal_functor(w["retraction"], C, K, w["psi0"], w["psi"])


# ------------------------------------------------------------ extraction

def extract(C: CompactStructure, check: bool = True) -> CocycleData:
    """G = object classes under ⊗, H = scalars under ∘ (inverse †), g▷s the
    scalar h with ρ(id_g ⊗ s)ρ† = h•id_g, and ω(A,B,C) the scalar with
    α_{A,B,C} = ω•id after skeletalize and strictify_units.  With a valid
    symmetry this scalar is Tr(α), which ``check`` confirms."""
    symmetric = C.meta.get("symmetric", True)
    if check:
        _require_groupoid(C, symmetric=symmetric)
    K, _ = skeletalize(C, check=False)
    K, _ = strictify_units(K, check=False)
    B = K.base
    no = B.n_objects
    scalars = K.scalars
    spos = {s: i for i, s in enumerate(scalars)}
    H = FinMonoid(tuple(B.labels[s] for s in scalars), spos[K.id(K.unit)],
                  [[spos[K.comp(s, t)] for t in scalars] for s in scalars])
    G = FinMonoid(tuple(B.objects), K.unit, [[K.to(a, b) for b in range(no)] for a in range(no)])
    coef = [{scalar_mult(K, s, K.id(a)): i for i, s in enumerate(scalars)} for a in range(no)]
    action = tuple(tuple(coef[a][K.comp(K.runit[a], K.t(K.id(a), s), K.dag(K.runit[a]))] for s in scalars)
                   for a in range(no))
    omega = tuple(tuple(tuple(coef[K.to(K.to(a, b), c)][K.assoc[(a, b, c)]] for c in range(no))
                        for b in range(no)) for a in range(no))
    d = CocycleData(G, H, action, omega, meta={"normalization": NORMALIZATION, "symmetric": symmetric})
    if check:
        v = verify_cocycle(d)
        if not v:
            raise StructureError(f"extracted data is not a cocycle at {v.witness}: {v.detail}")
        if symmetric:
            for a, b, c in product(range(no), repeat=3):
                if trace_big(K, K.assoc[(a, b, c)]) != scalars[omega[a][b][c]]:
                    raise StructureError(f"Tr(α) differs from the associator scalar at {(a, b, c)}")
    return d


# ------------------------------------------------------------ cohomology

def coboundary(d: CocycleData, beta: dict) -> tuple:
    """δβ(a,b,c) = a▷β(b,c) · β(a,bc) · β(ab,c)⁻¹ · β(a,b)⁻¹."""
    G, H, act = d.G, d.H, d.action
    hinv = _inverses(H)
    m = H.mul
    return tuple(tuple(tuple(
        m(m(act[a][beta[(b, c)]], beta[(a, G.mul(b, c))]), m(hinv[beta[(G.mul(a, b), c)]], hinv[beta[(a, b)]]))
        for c in range(G.n)) for b in range(G.n)) for a in range(G.n))


def twist_by(d: CocycleData, beta: dict) -> CocycleData:
    """ω · δβ, cohomologous to ω by construction."""
    db = coboundary(d, beta)
    G, H = d.G, d.H
    w = tuple(tuple(tuple(H.mul(d.omega[a][b][c], db[a][b][c]) for c in range(G.n))
                    for b in range(G.n)) for a in range(G.n))
    return CocycleData(G, H, d.action, w, dict(d.meta))


def cohomologous(d1: CocycleData, d2: CocycleData, budget: int = 1_000_000) -> Verdict:
    """Is ω1 = ω2 · δβ for a normalized 2-cochain β?  Backtracking over the
    values β(a, b), a, b ≠ e, in lexicographic order; the witness is the
    first β found.  Refused as undecided when the search exceeds ``budget``
    nodes."""
    if d1.G.table != d2.G.table or d1.G.unit != d2.G.unit:
        raise Refused("the groups of object classes differ")
    if d1.H.table != d2.H.table or d1.H.unit != d2.H.unit or d1.action != d2.action:
        raise Refused("the scalar groups or actions differ")
    G, H, act = d1.G, d1.H, d1.action
    e, u = G.unit, H.unit
    hinv = _inverses(H)
    m = H.mul
    # target: δβ = ω1 / ω2
    target = {(a, b, c): m(d1.omega[a][b][c], hinv[d2.omega[a][b][c]])
              for a, b, c in product(range(G.n), repeat=3)}
    free = [(a, b) for a in range(G.n) for b in range(G.n) if a != e and b != e]
    order = {k: i for i, k in enumerate(free)}
    beta = {(a, b): u for a in range(G.n) for b in range(G.n)}

    def rank(k):
        return order.get(k, -1)

    checks = [[] for _ in free]
    for a, b, c in product(range(G.n), repeat=3):
        keys = [(b, c), (a, G.mul(b, c)), (G.mul(a, b), c), (a, b)]
        last = max(rank(k) for k in keys)
        if last < 0:
            if target[(a, b, c)] != u:
                return Verdict(False, None, "not cohomologous", {"nodes": 0})
            continue
        checks[last].append((a, b, c))
    nodes = 0

    def ok(a, b, c):
        val = m(m(act[a][beta[(b, c)]], beta[(a, G.mul(b, c))]),
                m(hinv[beta[(G.mul(a, b), c)]], hinv[beta[(a, b)]]))
        return val == target[(a, b, c)]

    def search(i):
        nonlocal nodes
        if i == len(free):
            return True
        for h in range(H.n):
            nodes += 1
            if nodes > budget:
                raise Refused("undecided at desk scale", nodes)
            beta[free[i]] = h
            if all(ok(*q) for q in checks[i]) and search(i + 1):
                return True
        beta[free[i]] = u
        return False

    if search(0):
        return Verdict(True, dict(beta), extra={"nodes": nodes})
    return Verdict(False, None, "not cohomologous", {"nodes": nodes})


# ------------------------------------------------------------ enumeration

def normalized_cocycles(G: FinMonoid, H: FinMonoid, action: tuple | None = None):
    """Every normalized 3-cocycle ω: G³ → H, by exhaustive backtracking over
    the entries ω(a,b,c), a, b, c ≠ e, pruning each cocycle identity as soon
    as its entries are assigned.  Yields omega tables in lexicographic
    order of the entry values."""
    act = action if action is not None else trivial_action(G, H)
    e, u = G.unit, H.unit
    n = G.n
    n2 = n * n

    def flat(a, b, c):
        return a * n2 + b * n + c

    free = [flat(a, b, c) for a in range(n) for b in range(n) for c in range(n) if e not in (a, b, c)]
    order = {k: i for i, k in enumerate(free)}
    w = [u] * (n * n2)
    mul, m = G.table, H.table
    checks = [[] for _ in free]
    for a, b, c, d in product(range(n), repeat=4):
        keys = (flat(b, c, d), flat(a, mul[b][c], d), flat(a, b, c), flat(mul[a][b], c, d), flat(a, b, mul[c][d]))
        last = max(order.get(k, -1) for k in keys)
        if last >= 0:
            checks[last].append((act[a],) + keys)
    nfree = len(free)
    values = range(H.n)

    def search(i):
        slot = free[i]
        here = checks[i]
        for h in values:
            w[slot] = h
            for ac, k1, k2, k3, k4, k5 in here:
                if m[m[ac[w[k1]]][w[k2]]][w[k3]] != m[w[k4]][w[k5]]:
                    break
            else:
                if i + 1 == nfree:
                    yield tuple(tuple(tuple(w[a * n2 + b * n:a * n2 + b * n + n]) for b in range(n))
                                for a in range(n))
                else:
                    yield from search(i + 1)
        w[slot] = u

    if nfree == 0:
        yield tuple(tuple(tuple(w[a * n2 + b * n:a * n2 + b * n + n]) for b in range(n)) for a in range(n))
        return
    yield from search(0)


def brute_force_cocycles(G: FinMonoid, H: FinMonoid, limit: int = 2_000_000) -> list:
    """Oracle: test every normalized cochain against the full identity."""
    e, u = G.unit, H.unit
    n = G.n
    free = [(a, b, c) for a in range(n) for b in range(n) for c in range(n) if e not in (a, b, c)]
    if H.n ** len(free) > limit:
        raise Refused("too many cochains for the brute-force oracle", H.n ** len(free))
    act = trivial_action(G, H)
    out = []
    for vals in product(range(H.n), repeat=len(free)):
        w = [[[u] * n for _ in range(n)] for _ in range(n)]
        for (a, b, c), v in zip(free, vals):
            w[a][b][c] = v
        d = CocycleData(G, H, act, w)
        if verify_cocycle(d):
            out.append(d.omega)
    return out
