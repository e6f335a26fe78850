"""Take apart a commutative inverse monoid into a semilattice of abelian
groups and glue it back together."""

from cptinv import corpus
from cptinv.finalg import inverse_structure, monoid_isomorphic
from cptinv.jarek import jarek_compose, jarek_decompose, jarek_roundtrip


def show(name, M):
    I = inverse_structure(M)
    D = jarek_decompose(I)
    print(f"{name}: {M.n} elements, idempotents {[D.S.base.elements[s] for s in range(D.S.n)]}")
    for s, G in enumerate(D.fibers):
        print(f"  group over {D.S.base.elements[s]!r}: {list(G.elements)}")
    for (s, t), m in sorted(D.restrict.items()):
        if s != t:
            print(f"  restriction {t} -> {s}: {m}")
    back = jarek_compose(D)
    print(f"  glued back: isomorphic={monoid_isomorphic(back.base, M).ok}, exact={jarek_roundtrip(I).ok}")


if __name__ == "__main__":
    for name in ("z2zero", "chain3", "z2xz2"):
        show(name, corpus.MONOIDS[name]())
