import pytest

from cptinv import corpus
from cptinv.compactdecomp import (canonical_order, compose_compact, decompose_compact, desk_diagrams,
                                  functor_to_diagram_morphism, jarek_consistency, psi_cooperation,
                                  roundtrip_category, roundtrip_diagram, strict_chain_diagram, strict_fiber)
from cptinv.errors import Refused
from cptinv.finalg import cyclic_group
from cptinv.fincat import Functor, identity_functor
from cptinv.monoidal import compact_isomorphic, strict_psi, validate_compact
from cptinv.semidiag import check_diagram_morphism, single_fiber, validate_diagram

INVERSE = {name: f() for name, f in corpus.COMPACT.items() if corpus.EXPECTED[name]["inverse"]}


@pytest.mark.parametrize("name", sorted(INVERSE))
def test_decompose_validates(name):
    D = decompose_compact(INVERSE[name])
    assert validate_diagram(D) == []
    assert sorted(canonical_order(INVERSE[name], D)) == list(range(INVERSE[name].base.n_morphisms))


def test_decompose_group_is_a_point():
    D = decompose_compact(corpus.z2disc())
    assert D.S.n == 1 and D.cat(0).n_morphisms == 2


def test_decompose_z2zero_is_a_two_chain():
    C = corpus.COMPACT["z2zero"]()
    D = decompose_compact(C)
    assert D.S.n == 2 and sorted(D.cat(s).n_morphisms for s in range(2)) == [1, 2]
    assert jarek_consistency(C)


def test_decompose_refuses_non_inverse():
    with pytest.raises(Refused):
        decompose_compact(corpus.COMPACT["z4mult"]())


def test_compose_single_fiber():
    C = corpus.z2disc()
    C2 = compose_compact(single_fiber(C))
    assert validate_compact(C2) == []
    assert compact_isomorphic(C2, C)


@pytest.mark.parametrize("name", sorted(INVERSE))
def test_roundtrip_category(name):
    assert roundtrip_category(INVERSE[name])
    assert psi_cooperation(INVERSE[name]) == []


@pytest.mark.parametrize("name", sorted(k for k, C in INVERSE.items() if C.base.n_objects == 1))
def test_one_object_matches_jarek(name):
    assert jarek_consistency(INVERSE[name])


def test_functor_identity():
    C = INVERSE["z2zero"]
    F = identity_functor(C.base)
    m = functor_to_diagram_morphism(F, C, C, *strict_psi(F, C, C))
    D = decompose_compact(C)
    assert m.phi == tuple(range(D.S.n))
    assert check_diagram_morphism(m, D, D)


def test_functor_collapse_to_slat2():
    C, L = INVERSE["z2zero"], INVERSE["slat2"]
    lab = C.base.labels
    target = {"1": "1", "a": "1", "0": "0"}
    F = Functor((0,), tuple(L.base.labels.index(target[lab[f]]) for f in range(C.base.n_morphisms)))
    m = functor_to_diagram_morphism(F, C, L, *strict_psi(F, C, L))
    assert sorted(m.phi) == [0, 1]


def test_strict_fiber_is_compact():
    C = strict_fiber(cyclic_group(2), cyclic_group(3))
    assert validate_compact(C) == []
    assert C.base.n_objects == 2 and C.base.n_morphisms == 6


def test_strict_chain_roundtrip():
    G, H = cyclic_group(2), cyclic_group(2)
    twist = {(a, b): 1 if a == b == 1 else 0 for a in range(2) for b in range(2)}
    D = strict_chain_diagram(G, [H, H], [(0, 1)], [twist])
    assert validate_diagram(D) == []
    assert roundtrip_diagram(D)


def test_desk_sample_roundtrips():
    items = list(desk_diagrams(objects=("1",), groups=("1", "Z2", "Z3"), max_size=2))
    assert len(items) > 10
    for name, D in items:
        assert validate_diagram(D) == [], name
        assert roundtrip_diagram(D), name
