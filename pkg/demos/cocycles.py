"""Skeletal compact groupoids from 3-cocycles: both classes over Z/2, and
which of them admit a symmetry."""

from cptinv.cocycle import (CocycleData, cohomologous, data_equal, extract, find_symmetry, normalized_cocycles,
                            reconstruct, trivial_action)
from cptinv.finalg import cyclic_group

if __name__ == "__main__":
    Z2 = cyclic_group(2)
    data = [CocycleData(Z2, Z2, trivial_action(Z2, Z2), w) for w in normalized_cocycles(Z2, Z2)]
    for i, d in enumerate(data):
        C = reconstruct(d)
        print(f"cocycle {i}: omega(g,g,g) = {d.H.elements[d.omega[1][1][1]]}, "
              f"extract(reconstruct) exact: {data_equal(extract(C), d)}, "
              f"symmetric: {C.meta['symmetric']}, some symmetry exists: {find_symmetry(d).ok}")
    print("the two are cohomologous:", cohomologous(data[0], data[1]).ok)
