"""Split idempotents, products and functor categories, with their predicted
decompositions, and the subunits that appear after splitting."""

from cptinv import corpus
from cptinv.constructions import (functor_category, functorcat_prediction, product, product_prediction,
                                  split_idempotents, split_prediction)
from cptinv.monoidal import subunit_order_check, subunits

if __name__ == "__main__":
    C = corpus.build("z2zero")
    print("z2zero subunits before splitting:", len(subunits(C)))
    P = split_idempotents(C, [C.base.labels.index("1"), C.base.labels.index("0")])
    print(f"split: {P.base.n_objects} objects, prediction holds: {split_prediction(C, P).ok}")
    print("subunits after splitting:", len(subunits(P)), "order check:", subunit_order_check(P).ok)

    A, B = corpus.build("z2disc"), corpus.build("z2zero")
    AB = product(A, B)
    print(f"z2disc x z2zero: {AB.base.n_morphisms} morphisms, prediction holds: {product_prediction(A, B, AB).ok}")

    G = corpus.build("z2").base
    F = functor_category(G, B)
    print(f"[Z2, z2zero]: {F.base.n_objects} functors, prediction holds: {functorcat_prediction(G, B, F).ok}")
