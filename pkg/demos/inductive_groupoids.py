"""The inverse monoid of partial bijections of a 2-element set as an ordered
groupoid, and the locally complete groupoid of the category of partial
injections."""

from cptinv import corpus
from cptinv.finalg import inverse_structure, monoid_isomorphic
from cptinv.ordgpd import block_comparability_check, dewolf_pronk, esn_forward, esn_reverse, validate_ordered_groupoid

if __name__ == "__main__":
    M = corpus.i2()
    G = esn_forward(inverse_structure(M))
    C = G.groupoid
    print(f"i2 has {M.n} elements; its groupoid has {C.n_objects} objects and {C.n_morphisms} arrows")
    print("laws:", validate_ordered_groupoid(G) or "all hold")
    print("reverse is isomorphic to i2:", monoid_isomorphic(esn_reverse(G).base, M).ok)

    L = dewolf_pronk(corpus.pinj2())
    print(f"pinj2 gives {len(L.blocks)} blocks of sizes {[len(b) for b in L.blocks]}")
    print("comparability only within blocks:", block_comparability_check(L).ok)
