from dataclasses import replace

import pytest

from cptinv import corpus
from cptinv.finalg import cyclic_group, inverse_structure, monoid_isomorphic
from cptinv.fincat import from_monoid
from cptinv.ordgpd import (OrderedGroupoid, block_comparability_check, dewolf_pronk, discrete, esn_forward,
                           esn_reverse, esn_roundtrip, is_inductive, validate_locally_complete,
                           validate_ordered_groupoid)
from cptinv.serialize import to_dict

INVERSE_MONOIDS = {k: f() for k, f in corpus.MONOIDS.items() if k != "z4mult"}


def test_esn_forward_examples():
    G = esn_forward(inverse_structure(corpus.triv1()))
    assert (G.groupoid.n_objects, G.groupoid.n_morphisms) == (1, 1)
    M = corpus.z2zero()
    G = esn_forward(inverse_structure(M))
    C = G.groupoid
    assert list(C.objects) == ["1", "0"]
    assert {C.labels[f] for f in C.endos(0)} == {"1", "a"}
    assert {C.labels[f] for f in C.endos(1)} == {"0"}
    assert G.obj_leq(1, 0) and not G.obj_leq(0, 1)
    G = esn_forward(inverse_structure(corpus.i2()))
    assert (G.groupoid.n_objects, G.groupoid.n_morphisms) == (4, 7)


@pytest.mark.parametrize("name", sorted(INVERSE_MONOIDS))
def test_esn_forward_validates_and_reverses(name):
    I = inverse_structure(INVERSE_MONOIDS[name])
    G = esn_forward(I)
    assert validate_ordered_groupoid(G) == []
    assert is_inductive(G)
    assert monoid_isomorphic(esn_reverse(G).base, I.base)
    assert esn_roundtrip(I)


def test_esn_reverse_of_point():
    G = esn_forward(inverse_structure(corpus.triv1()))
    assert monoid_isomorphic(esn_reverse(G).base, corpus.triv1())


def test_non_monotone_inverse_reported():
    G = esn_forward(inverse_structure(corpus.i2()))
    C = G.groupoid
    f, g = next((f, g) for f, g in sorted(G.mor_order) if f != g and C.dagger[f] != f)
    broken = OrderedGroupoid(C, G.obj_order, G.mor_order - {(C.dagger[f], C.dagger[g])}, G.restriction)
    assert any("inverse is not monotone" in p for p in validate_ordered_groupoid(broken))


def test_discrete_order_is_valid():
    for C in (corpus.z2disc().base, from_monoid(cyclic_group(3), (0, 2, 1))):
        assert validate_ordered_groupoid(discrete(C)) == []


def test_dewolf_pronk_pinj2():
    L = dewolf_pronk(corpus.pinj2())
    assert validate_locally_complete(L) == []
    assert block_comparability_check(L)
    assert len(L.blocks) == 3
    assert [len(b) for b in L.blocks] == [1, 2, 4]


def test_dewolf_pronk_of_groupoid_is_discrete():
    C = corpus.z2disc().base
    L = dewolf_pronk(C)
    assert [len(b) for b in L.blocks] == [1] * C.n_objects
    assert L.base.obj_order == {(a, a) for a in range(C.n_objects)}


def test_dewolf_pronk_one_object_matches_esn():
    M = corpus.z2zero()
    I = inverse_structure(M)
    L = dewolf_pronk(from_monoid(M, I.dagger))
    G = esn_forward(I)
    assert len(L.blocks) == 1
    a, b = to_dict(L.base), to_dict(G)
    for key in ("obj_order", "mor_order", "restriction"):
        assert a[key] == b[key]
    assert a["groupoid"]["compose"] == b["groupoid"]["compose"]
    assert [m["dom"] for m in a["groupoid"]["morphisms"]] == [m["dom"] for m in b["groupoid"]["morphisms"]]


def test_block_comparability_detects_cross_block_order():
    L = dewolf_pronk(corpus.pinj2())
    G = L.base
    a, b = L.blocks[0][0], L.blocks[1][0]
    broken = replace(L, base=replace(G, obj_order=G.obj_order | {(a, b)}))
    assert not block_comparability_check(broken)
