"""Decompose compact inverse categories over their idempotent scalars,
recompose, and watch the one non-inverse example get refused."""

from cptinv import corpus
from cptinv.compactdecomp import decompose_compact, roundtrip_category
from cptinv.errors import Refused
from cptinv.monoidal import compact_inverse_check

if __name__ == "__main__":
    for name in ("z2zero", "frel01", "z2disc_x_z2zero"):
        C = corpus.build(name)
        D = decompose_compact(C)
        sizes = [(D.cat(s).n_objects, D.cat(s).n_morphisms) for s in range(D.S.n)]
        print(f"{name}: {D.S.n} scalars, fibers (objects, morphisms) {sizes}, nested={D.nested}")
        print(f"  recomposes to the same tables: {roundtrip_category(C).ok}")
    C = corpus.build("z4mult")
    v = compact_inverse_check(C)
    print(f"z4mult is compact inverse: {v.ok} (witness {C.base.labels[v.witness]})")
    try:
        decompose_compact(C)
    except Refused as e:
        print("decomposition refused:", e)
