"""Finite dagger categories with explicit composition tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import _iso
from .errors import StructureError, Verdict
from .finalg import FinMonoid


@dataclass(frozen=True, eq=False)
class DagCategory:
    """Objects and morphisms are indices.  ``compose[(g, f)]`` is g∘f and is
    present exactly for composable pairs (dom g = cod f)."""

    objects: tuple
    labels: tuple
    dom: tuple
    cod: tuple
    identity: tuple
    compose: dict
    dagger: tuple

    def __post_init__(self):
        for name in ("objects", "labels", "dom", "cod", "identity", "dagger"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "compose", dict(self.compose))
        no, nm = len(self.objects), len(self.labels)
        if not (len(self.dom) == len(self.cod) == len(self.dagger) == nm):
            raise StructureError("dom, cod, dagger and labels must have one entry per morphism")
        if len(self.identity) != no:
            raise StructureError("identity needs one morphism per object")
        for seq, bound, what in ((self.dom, no, "dom"), (self.cod, no, "cod"),
                                 (self.identity, nm, "identity"), (self.dagger, nm, "dagger")):
            for i, v in enumerate(seq):
                if not 0 <= v < bound:
                    raise StructureError(f"{what}[{i}] = {v} out of range")
        for (g, f), h in self.compose.items():
            if not (0 <= g < nm and 0 <= f < nm and 0 <= h < nm):
                raise StructureError(f"composition entry {(g, f, h)} out of range")
            if self.dom[g] != self.cod[f]:
                raise StructureError(f"composition entry {(g, f)} is not composable")

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.labels)

    @cached_property
    def homs(self) -> dict:
        out = {(a, b): [] for a in range(self.n_objects) for b in range(self.n_objects)}
        for m in range(self.n_morphisms):
            out[(self.dom[m], self.cod[m])].append(m)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, a: int, b: int) -> tuple:
        return self.homs[(a, b)]

    @cached_property
    def _outgoing(self) -> tuple:
        out = [[] for _ in range(self.n_objects)]
        for m in range(self.n_morphisms):
            out[self.dom[m]].append(m)
        return tuple(tuple(x) for x in out)

    def _out(self, a: int) -> tuple:
        """Morphisms whose domain is ``a``."""
        return self._outgoing[a]

    def endos(self, a: int) -> tuple:
        return self.homs[(a, a)]

    def comp(self, *fs: int) -> int:
        """fs[0] ∘ fs[1] ∘ ... ∘ fs[-1]."""
        acc = fs[-1]
        for g in reversed(fs[:-1]):
            try:
                acc = self.compose[(g, acc)]
            except KeyError:
                raise StructureError(
                    f"cannot compose {self.labels[g]!r} after {self.labels[acc]!r}"
                ) from None
        return acc

    def dag(self, f: int) -> int:
        return self.dagger[f]

    def index_of(self, label) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def morphisms(self) -> list:
        return [(self.labels[m], self.dom[m], self.cod[m]) for m in range(self.n_morphisms)]


@dataclass(frozen=True)
class Functor:
    obj: tuple
    mor: tuple

    def __post_init__(self):
        object.__setattr__(self, "obj", tuple(self.obj))
        object.__setattr__(self, "mor", tuple(self.mor))


def identity_functor(C: DagCategory) -> Functor:
    return Functor(range(C.n_objects), range(C.n_morphisms))


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G after F."""
    return Functor([G.obj[a] for a in F.obj], [G.mor[m] for m in F.mor])


def validate_category(C: DagCategory) -> list[str]:
    """Every violated category or dagger law; empty iff C is a dagger category."""
    report = []
    lab = C.labels
    for a in range(C.n_objects):
        i = C.identity[a]
        if C.dom[i] != a or C.cod[i] != a:
            report.append(f"identity of object {a} is not an endomorphism of it")
    composable = [(g, f) for f in range(C.n_morphisms) for g in C._out(C.cod[f])]
    for g, f in composable:
        if (g, f) not in C.compose:
            report.append(f"missing composite {lab[g]!r}∘{lab[f]!r}")
            continue
        h = C.compose[(g, f)]
        if C.dom[h] != C.dom[f] or C.cod[h] != C.cod[g]:
            report.append(f"composite {lab[g]!r}∘{lab[f]!r} has the wrong type")
    if report:
        return report
    for f in range(C.n_morphisms):
        if C.compose[(f, C.identity[C.dom[f]])] != f:
            report.append(f"right identity law fails at {lab[f]!r}")
        if C.compose[(C.identity[C.cod[f]], f)] != f:
            report.append(f"left identity law fails at {lab[f]!r}")
    for g, f in composable:
        gf = C.compose[(g, f)]
        for h in C._out(C.cod[g]):
            if C.compose[(h, gf)] != C.compose[(C.compose[(h, g)], f)]:
                report.append(f"associativity fails at ({lab[h]!r}, {lab[g]!r}, {lab[f]!r})")
    d = C.dagger
    for f in range(C.n_morphisms):
        if d[d[f]] != f:
            report.append(f"dagger is not involutive at {lab[f]!r}")
        if C.dom[d[f]] != C.cod[f] or C.cod[d[f]] != C.dom[f]:
            report.append(f"dagger of {lab[f]!r} has the wrong type")
    for a in range(C.n_objects):
        if d[C.identity[a]] != C.identity[a]:
            report.append(f"dagger moves the identity of object {a}")
    if any("wrong type" in r for r in report):
        return report
    for g, f in composable:
        if d[C.compose[(g, f)]] != C.compose[(d[f], d[g])]:
            report.append(f"(g∘f)† != f†∘g† at ({lab[g]!r}, {lab[f]!r})")
    return report


def is_inverse_category(C: DagCategory) -> Verdict:
    """f = f f† f for all f, and f f† g g† = g g† f f† for f, g with equal domain.

    The second law is read on the idempotents f†f, g†g at the shared domain,
    which is the same as commuting all pairs of idempotents ff† at a common
    codomain after swapping f with f†.
    """
    d = C.dagger
    for f in range(C.n_morphisms):
        if C.comp(f, d[f], f) != f:
            return Verdict(False, ("f != f f† f", f), f"f = {C.labels[f]!r}")
    for a in range(C.n_objects):
        out = C._out(a)
        idem = sorted({C.comp(d[f], f) for f in out})
        for i, e in enumerate(idem):
            for e2 in idem[i + 1:]:
                if C.comp(e, e2) != C.comp(e2, e):
                    return Verdict(False, ("idempotents do not commute", e, e2),
                                   f"{C.labels[e]!r}, {C.labels[e2]!r}")
    return Verdict(True)


def is_groupoid(C: DagCategory) -> Verdict:
    """Every f is inverted by its dagger."""
    d = C.dagger
    for f in range(C.n_morphisms):
        if C.comp(d[f], f) != C.identity[C.dom[f]] or C.comp(f, d[f]) != C.identity[C.cod[f]]:
            return Verdict(False, f, f"{C.labels[f]!r} is not unitary")
    return Verdict(True)


def search_dagger(C: DagCategory) -> tuple | None:
    """The unique g with f = fgf and g = gfg for each f, if every f has one."""
    out = []
    for f in range(C.n_morphisms):
        cands = [g for g in C.hom(C.cod[f], C.dom[f])
                 if C.comp(f, g, f) == f and C.comp(g, f, g) == g]
        if len(cands) != 1:
            return None
        out.append(cands[0])
    return tuple(out)


def check_functor(F: Functor, C: DagCategory, D: DagCategory, dagger: bool = True) -> Verdict:
    """Identities, composition and (optionally) dagger preserved.

    Ill-typed maps (wrong lengths, out of range, dom/cod not respected) raise.
    """
    if len(F.obj) != C.n_objects or len(F.mor) != C.n_morphisms:
        raise StructureError("functor maps must cover every object and morphism")
    if any(not 0 <= a < D.n_objects for a in F.obj) or any(not 0 <= m < D.n_morphisms for m in F.mor):
        raise StructureError("functor maps into nonexistent objects or morphisms")
    for f in range(C.n_morphisms):
        if D.dom[F.mor[f]] != F.obj[C.dom[f]] or D.cod[F.mor[f]] != F.obj[C.cod[f]]:
            raise StructureError(f"image of {C.labels[f]!r} has the wrong type")
    for a in range(C.n_objects):
        if F.mor[C.identity[a]] != D.identity[F.obj[a]]:
            return Verdict(False, ("identity", a))
    for (g, f), gf in C.compose.items():
        if F.mor[gf] != D.compose[(F.mor[g], F.mor[f])]:
            return Verdict(False, ("composition", g, f))
    if dagger:
        for f in range(C.n_morphisms):
            if F.mor[C.dagger[f]] != D.dagger[F.mor[f]]:
                return Verdict(False, ("dagger", f))
    return Verdict(True)


def dagger_functor_check(F: Functor, C: DagCategory, D: DagCategory) -> Verdict:
    return check_functor(F, C, D, dagger=True)


def from_monoid(M: FinMonoid, dagger: Sequence[int] | None = None, obj="*") -> DagCategory:
    """One-object dagger category with morphisms the elements of M."""
    n = M.n
    dag = tuple(dagger) if dagger is not None else tuple(range(n))
    compose = {(g, f): M.mul(g, f) for g in range(n) for f in range(n)}
    return DagCategory((obj,), M.elements, (0,) * n, (0,) * n, (M.unit,), compose, dag)


def endo_monoid(C: DagCategory, a: int) -> tuple[FinMonoid, tuple]:
    """C(a, a) as a monoid, plus the dagger restricted to it."""
    ms = C.endos(a)
    pos = {m: i for i, m in enumerate(ms)}
    table = [[pos[C.compose[(g, f)]] for f in ms] for g in ms]
    M = FinMonoid(tuple(C.labels[m] for m in ms), pos[C.identity[a]], table)
    return M, tuple(pos[C.dagger[m]] for m in ms)


def relabel_category(C: DagCategory, order: Sequence[int]) -> DagCategory:
    """Reorder morphisms so that new morphism i is old morphism ``order[i]``."""
    pos = {old: new for new, old in enumerate(order)}
    if len(pos) != C.n_morphisms:
        raise StructureError("relabel order must be a permutation of the morphisms")
    compose = {(pos[g], pos[f]): pos[h] for (g, f), h in C.compose.items()}
    return DagCategory(
        C.objects,
        [C.labels[o] for o in order],
        [C.dom[o] for o in order],
        [C.cod[o] for o in order],
        [pos[i] for i in C.identity],
        compose,
        [pos[C.dagger[o]] for o in order],
    )


def tables_equal(C: DagCategory, D: DagCategory, labels: bool = False) -> bool:
    same = (C.objects == D.objects and C.dom == D.dom and C.cod == D.cod
            and C.identity == D.identity and C.compose == D.compose and C.dagger == D.dagger)
    return same and (not labels or C.labels == D.labels)


# ------------------------------------------------------------ isomorphism

def _morphism_color(C: DagCategory, m: int) -> tuple:
    a, b = C.dom[m], C.cod[m]
    endo = a == b
    power = None
    if endo:
        seen, p, k = {}, m, 0
        while p not in seen:
            seen[p] = k
            p = C.compose[(p, m)]
            k += 1
        power = (seen[p], k - seen[p])
    return ("mor", len(C.hom(a, b)), len(C.endos(a)), len(C.endos(b)),
            C.identity[a] == m, C.dagger[m] == m, power)


def category_structure(C: DagCategory) -> _iso.Structure:
    no = C.n_objects
    colors = [("obj", len(C.endos(a)), len(C._out(a)),
               sum(1 for m in range(C.n_morphisms) if C.cod[m] == a)) for a in range(no)]
    colors += [_morphism_color(C, m) for m in range(C.n_morphisms)]
    S = _iso.Structure(colors)
    for m in range(C.n_morphisms):
        S.add("dom", (no + m,), C.dom[m])
        S.add("cod", (no + m,), C.cod[m])
        S.add("dag", (no + m,), no + C.dagger[m])
    for a in range(no):
        S.add("id", (a,), no + C.identity[a])
    for (g, f), h in C.compose.items():
        S.add("comp", (no + g, no + f), no + h)
    return S


def category_isomorphic(C: DagCategory, D: DagCategory) -> Verdict:
    """Search for a dagger isomorphism; the witness is a Functor."""
    if (C.n_objects, C.n_morphisms) != (D.n_objects, D.n_morphisms):
        return Verdict(False, detail="sizes differ")
    f = _iso.find_isomorphism(category_structure(C), category_structure(D))
    if f is None:
        return Verdict(False, detail="no isomorphism")
    no = C.n_objects
    return Verdict(True, Functor(f[:no], [x - no for x in f[no:]]))
