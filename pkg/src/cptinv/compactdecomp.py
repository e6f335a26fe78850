"""Compact inverse categories versus semilattices of compact groupoids.

``decompose_compact`` slices a compact inverse category by the idempotent
scalar tr(ff†); ``compose_compact`` glues a diagram of compact groupoids back
together, tensoring along the meet and correcting by the structure maps ψ of
the restriction to the top fiber.
"""

from __future__ import annotations

from itertools import product

from .errors import Refused, StructureError, Verdict
from .finalg import FinMonoid, FinSemilattice, abelian_group, chain, cyclic_group, is_homomorphism
from .fincat import DagCategory, Functor, check_functor, endo_monoid, identity_functor
from .monoidal import (CompactStructure, check_monoidal_functor, compact_groupoid_check,
                       compact_inverse_check, compact_tables_equal, relabel_compact, scalar_mult,
                       trace_small, validate_compact)
from .semidiag import (DiagramMorphism, SemilatticeDiagram, _glue, check_diagram_morphism, diagram_isomorphic,
                       from_abgroup_diagram, nesting, tagged_morphisms, validate_diagram)


def _require_compact_inverse(C: CompactStructure) -> None:
    problems = validate_compact(C)
    if problems:
        raise Refused("not a compact dagger category: " + problems[0], problems)
    v = compact_inverse_check(C)
    if not v:
        raise Refused("not a compact inverse category", v.witness)


def scalar_semilattice(C: CompactStructure) -> FinSemilattice:
    """S = {s ∈ C(I, I) | ss† = s} with s∧t = s∘t and top id_I."""
    carrier = [s for s in C.scalars if C.comp(s, C.dag(s)) == s]
    pos = {s: i for i, s in enumerate(carrier)}
    table = [[pos[C.comp(s, t)] for t in carrier] for s in carrier]
    M = FinMonoid(tuple(C.labels[s] for s in carrier), pos[C.id(C.unit)], table)
    return FinSemilattice(M, tuple(carrier))


def decompose_compact(C: CompactStructure) -> SemilatticeDiagram:
    """fiber(s) = {f | tr(ff†) = s} with identities s•id, coherence s•α etc.,
    units s•η, and restrictions f ↦ s•f.

    The objects of fiber(s) are the A with s ≤ dim(A), the only ones for
    which s•id_A lies over s.  When every dimension is id_I all fibers share
    C's objects; otherwise the diagram is nested.  ``meta["carriers"][s]``
    lists the original morphisms of fiber(s) and ``meta["objects"][s]`` its
    original objects.
    """
    _require_compact_inverse(C)
    B = C.base
    S = scalar_semilattice(C)
    trace = [trace_small(C, C.comp(f, C.dag(f))) for f in range(B.n_morphisms)]
    dims = [trace[C.id(a)] for a in range(B.n_objects)]
    fibers, carriers, objsets = [], [], []
    for s in S.carrier:
        ms = [f for f in range(B.n_morphisms) if trace[f] == s]
        objs = [a for a in range(B.n_objects) if C.comp(s, dims[a]) == s]
        pos = {f: i for i, f in enumerate(ms)}
        opos = {a: i for i, a in enumerate(objs)}

        def here(f, pos=pos, s=s):
            try:
                return pos[f]
            except KeyError:
                raise StructureError(f"{B.labels[f]!r} escapes the fiber over {B.labels[s]!r}") from None

        def sm(f, s=s):
            return here(scalar_mult(C, s, f))

        compose = {}
        for f in ms:
            for g in B._out(B.cod[f]):
                if g in pos:
                    compose[(pos[g], pos[f])] = here(B.compose[(g, f)])
        F = DagCategory([B.objects[a] for a in objs], [B.labels[f] for f in ms],
                        [opos[B.dom[f]] for f in ms], [opos[B.cod[f]] for f in ms],
                        [sm(C.id(a)) for a in objs], compose, [here(B.dagger[f]) for f in ms])
        fibers.append(CompactStructure(
            F, opos[C.unit], {(opos[a], opos[b]): opos[C.to(a, b)] for a in objs for b in objs},
            {(pos[f], pos[g]): here(C.t(f, g)) for f in ms for g in ms},
            {(opos[a], opos[b], opos[c]): sm(C.assoc[(a, b, c)]) for a in objs for b in objs for c in objs},
            [sm(C.lunit[a]) for a in objs], [sm(C.runit[a]) for a in objs],
            {(opos[a], opos[b]): sm(C.symm[(a, b)]) for a in objs for b in objs},
            [opos[C.dual[a]] for a in objs], [sm(C.eta[a]) for a in objs],
        ))
        carriers.append(tuple(ms))
        objsets.append(tuple(objs))
    restrict, psi = {}, {}
    for i, s in enumerate(S.carrier):
        pos_i = {f: k for k, f in enumerate(carriers[i])}
        opos_i = {a: k for k, a in enumerate(objsets[i])}
        Fi = fibers[i]
        for j in range(S.n):
            if not S.leq(i, j):
                continue
            restrict[(i, j)] = Functor([opos_i[a] for a in objsets[j]],
                                       [pos_i[scalar_mult(C, s, f)] for f in carriers[j]])
            oj = range(len(objsets[j]))
            psi[(i, j)] = (Fi.id(Fi.unit), {
                (a, b): Fi.id(opos_i[C.to(objsets[j][a], objsets[j][b])]) for a in oj for b in oj})
    nested = any(len(o) != B.n_objects for o in objsets)
    return SemilatticeDiagram(S, fibers, restrict, psi, nested=nested,
                              meta={"carriers": tuple(carriers), "objects": tuple(objsets)})


class _Gluing:
    """Global objects and the ψ-corrections used to transport fiber
    structure into the glued category."""

    def __init__(self, D: SemilatticeDiagram):
        self.D = D
        self.S = D.S
        self.iota, self.home = nesting(D)
        self.loc = [{A: a for a, A in enumerate(io)} for io in self.iota]
        top = D.fibers[D.S.top]
        self.unit = self.iota[D.S.top][top.unit]
        tensor = {}
        n = len(self.home)
        for A, B in product(range(n), repeat=2):
            v = self.S.meet(self.home[A], self.home[B])
            F = D.fibers[v]
            tensor[(A, B)] = self.iota[v][F.to(self.loc[v][A], self.loc[v][B])]
        self.tensor = tensor

    def psi(self, u: int, A: int, B: int) -> int:
        """ψ^u_{A,B}: loc(A) ⊗_u loc(B) → loc(A⊗B) in fiber u."""
        v = self.S.meet(self.home[A], self.home[B])
        lv = self.loc[v]
        return self.D.psi[(u, v)][1][(lv[A], lv[B])]

    def psi0(self, u: int) -> int:
        return self.D.psi[(u, self.S.top)][0]


def compose_compact(D: SemilatticeDiagram) -> CompactStructure:
    """Glue the fibers (see semidiag) and tensor along the meet:
    (s, f) ⊗ (t, g) = ψ_u ∘ (F(u≤s)f ⊗_u F(u≤t)g) ∘ ψ_u† in F(u), u = s∧t.

    With shared objects the unit, tensor of objects, coherence and duals
    come from the top fiber.  In a nested diagram each object A lives from
    its greatest fiber h(A) downwards, and every structure map at A, B, ...
    is taken from the fiber h(A)∧h(B)∧... and transported by ψ.
    """
    if D.relaxed or D.padded:
        raise Refused("gluing needs fibers with shared or nested objects")
    if not D.compact:
        raise Refused("every fiber must carry compact structure")
    for s in range(D.S.n):
        v = compact_groupoid_check(D.fibers[s])
        if not v:
            raise Refused(f"fiber {s} is not a compact groupoid: {v.detail}", s)
    S = D.S
    g = _Gluing(D)
    B = _glue(D)
    tags = tagged_morphisms(D)
    index = {tg: i for i, tg in enumerate(tags)}
    glob = [(g.iota[s][D.cat(s).dom[f]], g.iota[s][D.cat(s).cod[f]]) for s, f in tags]
    tensor_mor = {}
    for i, (s, f) in enumerate(tags):
        A, Bo = glob[i]
        for j, (t, h) in enumerate(tags):
            Co, Do = glob[j]
            u = S.meet(s, t)
            Fu = D.fibers[u]
            rf = D.restrict[(u, s)].mor[f]
            rg = D.restrict[(u, t)].mor[h]
            m = Fu.comp(g.psi(u, Bo, Do), Fu.t(rf, rg), Fu.dag(g.psi(u, A, Co)))
            tensor_mor[(i, j)] = index[(u, m)]
    n = len(g.home)
    objs = range(n)
    home, loc, T = g.home, g.loc, g.tensor
    I = g.unit

    def lift(v, m):
        return index[(v, m)]

    assoc = {}
    for a, b, c in product(objs, repeat=3):
        v = S.meet(S.meet(home[a], home[b]), home[c])
        F = D.fibers[v]
        la, lb, lc = loc[v][a], loc[v][b], loc[v][c]
        m = F.comp(g.psi(v, a, T[(b, c)]), F.t(F.id(la), g.psi(v, b, c)), F.assoc[(la, lb, lc)],
                   F.dag(F.t(g.psi(v, a, b), F.id(lc))), F.dag(g.psi(v, T[(a, b)], c)))
        assoc[(a, b, c)] = lift(v, m)
    lunit, runit, eta, dual = [], [], [], []
    for a in objs:
        v = home[a]
        F = D.fibers[v]
        la = loc[v][a]
        p0 = F.dag(g.psi0(v))
        lunit.append(lift(v, F.comp(F.lunit[la], F.t(p0, F.id(la)), F.dag(g.psi(v, I, a)))))
        runit.append(lift(v, F.comp(F.runit[la], F.t(F.id(la), p0), F.dag(g.psi(v, a, I)))))
        da = F.dual[la]
        dual.append(g.iota[v][da])
        eta.append(lift(v, F.comp(g.psi(v, g.iota[v][da], a), F.eta[la], p0)))
    symm = {}
    for a, b in product(objs, repeat=2):
        v = S.meet(home[a], home[b])
        F = D.fibers[v]
        symm[(a, b)] = lift(v, F.comp(g.psi(v, b, a), F.symm[(loc[v][a], loc[v][b])],
                                      F.dag(g.psi(v, a, b))))
    return CompactStructure(B, I, T, tensor_mor, assoc, lunit, runit, symm, dual, eta,
                            meta={"tags": tuple(tags)})


def canonical_order(C: CompactStructure, D: SemilatticeDiagram | None = None) -> list[int]:
    """Morphisms of C sorted by (position of tr(ff†) in S, dom, cod, index)."""
    if D is None:
        D = decompose_compact(C)
    carriers = D.meta["carriers"]
    return [carriers[s][f] for s, f in tagged_morphisms(D)]


def psi_cooperation(C: CompactStructure) -> list[str]:
    """(s•f) ⊗ (t•g) = (s∘t)•(f⊗g) for idempotent scalars s, t and all f, g."""
    S = scalar_semilattice(C)
    B = C.base
    bad = []
    for s, t in product(S.carrier, repeat=2):
        st = C.comp(s, t)
        for f, g in product(range(B.n_morphisms), repeat=2):
            if C.t(scalar_mult(C, s, f), scalar_mult(C, t, g)) != scalar_mult(C, st, C.t(f, g)):
                bad.append(f"at scalars {(s, t)} and morphisms {(f, g)}")
    return bad


def roundtrip_category(C: CompactStructure) -> Verdict:
    """compose(decompose(C)) equals C after canonical reordering."""
    D = decompose_compact(C)
    C2 = compose_compact(D)
    Cc = relabel_compact(C, canonical_order(C, D))
    if compact_tables_equal(Cc, C2):
        return Verdict(True, extra={"diagram": D, "recomposed": C2})
    return Verdict(False, detail="recomposed tables differ", extra={"diagram": D, "recomposed": C2})


def roundtrip_diagram(D: SemilatticeDiagram) -> Verdict:
    """decompose(compose(D)) ≅ D via s ↦ (s, id_I) and f ↦ (s, f).

    Each θ_s is checked to be a monoidal dagger isomorphism whose structure
    maps are the images of ψ†, and the squares with the restrictions commute.
    """
    C = compose_compact(D)
    problems = validate_compact(C)
    if problems:
        return Verdict(False, ("composite not compact", problems[0]))
    ci = compact_inverse_check(C)
    if not ci:
        return Verdict(False, ("composite not compact inverse", ci.witness))
    E = decompose_compact(C)
    S = D.S
    index = {tg: i for i, tg in enumerate(tagged_morphisms(D))}
    spos = {m: i for i, m in enumerate(E.S.carrier)}
    phi = []
    for s in range(S.n):
        m = index[(s, D.fibers[s].id(D.fibers[s].unit))]
        if m not in spos:
            return Verdict(False, ("unit of fiber is not an idempotent scalar", s))
        phi.append(spos[m])
    g = _Gluing(D)
    theta = []
    for s in range(S.n):
        target = {m: k for k, m in enumerate(E.meta["carriers"][phi[s]])}
        otarget = {A: k for k, A in enumerate(E.meta["objects"][phi[s]])}
        Fs = D.cat(s)
        try:
            mor = [target[index[(s, f)]] for f in range(Fs.n_morphisms)]
            obj = [otarget[g.iota[s][a]] for a in range(Fs.n_objects)]
        except KeyError:
            return Verdict(False, ("fiber is not carried onto a fiber", s))
        theta.append(Functor(obj, mor))
    m = DiagramMorphism(tuple(phi), tuple(theta))
    if sorted(phi) != list(range(E.S.n)):
        return Verdict(False, ("φ is not a bijection", phi))
    for s in range(S.n):
        if (sorted(theta[s].mor) != list(range(E.cat(phi[s]).n_morphisms))
                or sorted(theta[s].obj) != list(range(E.cat(phi[s]).n_objects))):
            return Verdict(False, ("θ is not a bijection", s))
    v = check_diagram_morphism(m, D, E)
    if not v:
        return Verdict(False, v.witness)
    for s in range(S.n):
        Fs, Es = D.fibers[s], E.fibers[phi[s]]
        th = theta[s].mor
        io = g.iota[s]
        chi0 = th[Fs.dag(g.psi0(s))]
        chi = {(a, b): th[Fs.dag(g.psi(s, io[a], io[b]))]
               for a, b in product(range(Fs.base.n_objects), repeat=2)}
        w = check_monoidal_functor(theta[s], Fs, Es, chi0, chi)
        if not w:
            return Verdict(False, ("θ is not monoidal", s, w.witness))
    coop = psi_cooperation(C)
    return Verdict(not coop, m, "" if not coop else "ψ does not cooperate with scalars",
                   {"composite": C, "decomposed": E, "psi_cooperation": coop})


def functor_to_diagram_morphism(G: Functor, C: CompactStructure, C2: CompactStructure,
                                psi0: int, psi: dict) -> DiagramMorphism:
    """φ(s) = ψ0† ∘ G(s) ∘ ψ0, θ_s = G restricted to fiber(s)."""
    v = check_monoidal_functor(G, C, C2, psi0, psi)
    if not v:
        raise Refused("not a monoidal dagger functor", v.witness)
    D, E = decompose_compact(C), decompose_compact(C2)
    spos = {m: i for i, m in enumerate(E.S.carrier)}
    phi = []
    for s in D.S.carrier:
        m = C2.comp(C2.dag(psi0), G.mor[s], psi0)
        if m not in spos:
            raise Refused("image scalar is not idempotent", s)
        phi.append(spos[m])
    theta = []
    for i, ms in enumerate(D.meta["carriers"]):
        target = {m: k for k, m in enumerate(E.meta["carriers"][phi[i]])}
        try:
            theta.append(Functor(G.obj, [target[G.mor[f]] for f in ms]))
        except KeyError:
            raise Refused("functor does not respect the fibers", i) from None
    m = DiagramMorphism(tuple(phi), tuple(theta))
    w = check_diagram_morphism(m, D, E)
    if not w:
        raise Refused("induced data is not natural", w.witness)
    return m


# ------------------------------------------------------------ desk diagrams

def strict_fiber(G: FinMonoid, H: FinMonoid) -> CompactStructure:
    """Skeletal strict compact groupoid: objects G, C(g, g) = H, tensor the
    product, every coherence map and unit an identity."""
    ng, nh = G.n, H.n
    inv = [next(b for b in range(ng) if G.mul(a, b) == G.unit) for a in range(ng)]
    hinv = [next(b for b in range(nh) if H.mul(a, b) == H.unit) for a in range(nh)]

    def m(g, h):
        return g * nh + h

    B = DagCategory(
        G.elements, [(G.elements[g], H.elements[h]) for g in range(ng) for h in range(nh)],
        [g for g in range(ng) for _ in range(nh)], [g for g in range(ng) for _ in range(nh)],
        [m(g, H.unit) for g in range(ng)],
        {(m(g, h), m(g, k)): m(g, H.mul(h, k)) for g in range(ng) for h in range(nh) for k in range(nh)},
        [m(g, hinv[h]) for g in range(ng) for h in range(nh)],
    )
    objs = range(ng)
    tobj = {(a, b): G.mul(a, b) for a, b in product(objs, repeat=2)}
    tmor = {(m(a, h), m(b, k)): m(G.mul(a, b), H.mul(h, k))
            for a, b in product(objs, repeat=2) for h, k in product(range(nh), repeat=2)}
    e = H.unit
    return CompactStructure(
        B, G.unit, tobj, tmor,
        {(a, b, c): m(G.prod(a, b, c), e) for a, b, c in product(objs, repeat=3)},
        [m(a, e) for a in objs], [m(a, e) for a in objs],
        {(a, b): m(G.mul(a, b), e) for a, b in product(objs, repeat=2)},
        inv, [m(G.unit, e)] * ng,
    )


def _homs(A: FinMonoid, B: FinMonoid) -> list[tuple]:
    out = []
    for f in product(range(B.n), repeat=A.n):
        if is_homomorphism(f, A, B):
            out.append(f)
    return out


def _twists(G: FinMonoid, H: FinMonoid) -> list[dict]:
    """Normalized symmetric 2-cocycles β: G×G → H."""
    pairs = [(a, b) for a in range(G.n) for b in range(G.n) if a != G.unit and b != G.unit and a <= b]
    out = []
    for vals in product(range(H.n), repeat=len(pairs)):
        beta = {}
        for (a, b), v in zip(pairs, vals):
            beta[(a, b)] = beta[(b, a)] = v
        for a in range(G.n):
            beta[(a, G.unit)] = beta[(G.unit, a)] = H.unit
        ok = all(H.mul(beta[(a, b)], beta[(G.mul(a, b), c)]) == H.mul(beta[(b, c)], beta[(a, G.mul(b, c))])
                 for a, b, c in product(range(G.n), repeat=3))
        if ok:
            out.append(beta)
    return out


DESK_GROUPS = {
    "1": lambda: cyclic_group(1),
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z2xZ2": lambda: abelian_group(2, 2),
}


def strict_chain_diagram(G: FinMonoid, Hs: list, homs: list, twists: list) -> SemilatticeDiagram:
    """Diagram over the chain 0 > 1 > ... (index 0 top) with strict fibers
    strict_fiber(G, Hs[i]); ``homs[i]`` maps H_i → H_{i+1} and ``twists[i]``
    is the 2-cocycle carried by ψ on that link."""
    n = len(Hs)
    S = FinSemilattice(chain(n))
    fibers = [strict_fiber(G, H) for H in Hs]
    nh = [H.n for H in Hs]
    ng = G.n
    # composite data along the chain: theta[(s, t)] on H_t, beta[(s, t)]: G×G → H_s
    theta, beta = {}, {}
    for s in range(n):
        theta[(s, s)] = tuple(range(nh[s]))
        beta[(s, s)] = {(a, b): Hs[s].unit for a in range(ng) for b in range(ng)}
    for t in range(n):
        for s in range(t + 1, n):
            link, tw = homs[s - 1], twists[s - 1]
            prev_t, prev_b = theta[(s - 1, t)], beta[(s - 1, t)]
            theta[(s, t)] = tuple(link[prev_t[h]] for h in range(nh[t]))
            beta[(s, t)] = {k: Hs[s].mul(link[prev_b[k]], tw[k]) for k in prev_b}
    restrict, psi = {}, {}
    for s in range(n):
        for t in range(s + 1):
            # chain order: s ≤ t iff s ≥ t as indices (index 0 is top)
            th = theta[(s, t)]
            restrict[(s, t)] = Functor(range(ng), [g * nh[s] + th[h] for g in range(ng) for h in range(nh[t])])
            b = beta[(s, t)]
            psi[(s, t)] = (G.unit * nh[s] + Hs[s].unit, {(x, y): G.mul(x, y) * nh[s] + b[(x, y)]
                                        for x in range(ng) for y in range(ng)})
    return SemilatticeDiagram(S, fibers, restrict, psi)


def _canonical_links(names, Hs, links, auts):
    """Choices of links that are lexicographically least in their orbit under
    relabelling each H_i by an automorphism (which gives isomorphic diagrams)."""
    def act(choice, autos):
        out = []
        for i, (h, tw) in enumerate(choice):
            a, b = autos[i], autos[i + 1]
            inv_a = [0] * len(a)
            for x, y in enumerate(a):
                inv_a[y] = x
            out.append((tuple(b[h[inv_a[x]]] for x in range(len(h))),
                        tuple(sorted((k, b[v]) for k, v in tw.items()))))
        return tuple(out)

    for choice in product(*links):
        key = act(choice, [tuple(range(H.n)) for H in Hs])
        if all(act(choice, autos) >= key for autos in product(*(auts[k] for k in names))):
            yield choice


def desk_diagrams(objects=("1", "Z2"), groups=tuple(DESK_GROUPS), max_size: int = 3,
                  up_to_automorphism: bool = True):
    """Every strict-fiber chain diagram with |S| ≤ max_size, fiber scalars
    from ``groups`` and objects from ``objects``, all restriction homomorphisms
    and all symmetric twists.  With ``up_to_automorphism`` only one diagram is
    kept per orbit under relabelling the fiber scalars.  Yields (name, diagram)."""
    built = {k: DESK_GROUPS[k]() for k in set(groups) | set(objects)}
    auts = {k: [f for f in _homs(H, H) if len(set(f)) == H.n] for k, H in built.items()}
    for gname in objects:
        G = built[gname]
        for size in range(1, max_size + 1):
            for names in product(groups, repeat=size):
                Hs = [built[k] for k in names]
                links = [[(h, tw) for h in _homs(Hs[i], Hs[i + 1]) for tw in _twists(G, Hs[i + 1])]
                         for i in range(size - 1)]
                choices = (_canonical_links(names, Hs, links, auts) if up_to_automorphism
                           else product(*links))
                for k, choice in enumerate(choices):
                    homs = [c[0] for c in choice]
                    tws = [c[1] for c in choice]
                    yield f"G={gname} H={'>'.join(names)} #{k}", strict_chain_diagram(G, Hs, homs, tws)


# ------------------------------------------------------------ one object

def jarek_consistency(C: CompactStructure) -> Verdict:
    """For one object, decompose_compact agrees with the abelian-group
    decomposition of the scalar monoid (both as plain dagger diagrams)."""
    from .finalg import InverseStructure
    from .jarek import jarek_decompose

    if C.base.n_objects != 1:
        raise Refused("needs a one-object category")
    D = decompose_compact(C)
    M, dagger = endo_monoid(C.base, 0)
    A = jarek_decompose(InverseStructure(M, dagger))
    plain = SemilatticeDiagram(D.S, [D.cat(s) for s in range(D.S.n)], D.restrict)
    return diagram_isomorphic(plain, from_abgroup_diagram(A))
