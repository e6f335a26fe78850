from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.cocycle import (CocycleData, brute_force_cocycles, check_equivalence_witness, coboundary,
                            cohomologous, data_equal, extract, find_symmetry, is_skeletal,
                            normalized_cocycles, reconstruct, skeletalize, strictify_units, trivial_action,
                            trivial_cocycle, twist_by, verify_cocycle)
from cptinv.constructions import split_idempotents
from cptinv.errors import Refused, StructureError
from cptinv.finalg import abelian_group, cyclic_group
from cptinv.monoidal import compact_groupoid_check, validate_compact

Z2, Z3, V4 = cyclic_group(2), cyclic_group(3), abelian_group(2, 2)


def data(G, H, omega=None):
    return CocycleData(G, H, trivial_action(G, H), omega if omega is not None else trivial_cocycle(G, H))


def nontrivial_z2():
    return next(w for w in normalized_cocycles(Z2, Z2) if w != trivial_cocycle(Z2, Z2))


def test_trivial_cocycle_verifies():
    for G, H in [(Z2, Z2), (Z3, V4), (V4, Z3)]:
        assert verify_cocycle(data(G, H))


def test_malformed_data_raises():
    with pytest.raises(StructureError):
        CocycleData(Z2, Z2, trivial_action(Z2, Z2), ((0,),))


def test_unnormalized_and_broken_cocycles_fail():
    w = [[[0] * 2 for _ in range(2)] for _ in range(2)]
    w[0][1][1] = 1
    assert not verify_cocycle(data(Z2, Z2, w))
    w = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    w[1][1][1] = 1
    v = verify_cocycle(data(Z3, Z2, w))
    assert not v and v.detail == "cocycle identity fails"


@pytest.mark.parametrize("G,H", [(Z2, Z2), (Z2, Z3), (Z3, Z2), (Z3, Z3), (Z3, V4)])
def test_enumeration_matches_brute_force(G, H):
    assert sorted(normalized_cocycles(G, H)) == sorted(brute_force_cocycles(G, H))


def test_cocycle_counts():
    assert len(list(normalized_cocycles(Z2, Z2))) == 2
    assert len(list(normalized_cocycles(Z3, Z3))) == 27


@pytest.mark.parametrize("G,H", [(Z2, Z2), (Z2, Z3), (Z3, Z2), (Z3, Z3)])
def test_reconstruct_extract_roundtrip(G, H):
    for w in normalized_cocycles(G, H):
        d = data(G, H, w)
        C = reconstruct(d)
        assert validate_compact(C, symmetric=C.meta["symmetric"]) == []
        assert data_equal(extract(C), d)


def test_nontrivial_z2_cocycle():
    d, t = data(Z2, Z2, nontrivial_z2()), data(Z2, Z2)
    assert verify_cocycle(d)
    assert not cohomologous(d, t)
    assert cohomologous(t, t)
    assert not find_symmetry(d)
    assert find_symmetry(t)
    assert reconstruct(d).meta["symmetric"] is False
    assert reconstruct(t).meta["symmetric"] is True


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_coboundaries_are_cohomologous(draw):
    G, H = draw.draw(st.sampled_from([(Z3, Z3), (V4, Z2), (Z3, Z2)]))
    beta = {(a, b): H.unit if G.unit in (a, b) else draw.draw(st.integers(0, H.n - 1))
            for a, b in product(range(G.n), repeat=2)}
    d = data(G, H, draw.draw(st.sampled_from(list(normalized_cocycles(G, H)))))
    assert verify_cocycle(data(G, H, coboundary(d, beta)))
    twisted = twist_by(d, beta)
    assert verify_cocycle(twisted)
    v = cohomologous(twisted, d)
    assert v
    assert data_equal(twist_by(d, v.witness), twisted)


@pytest.mark.parametrize("name", ["triv1", "z2", "z3", "z2disc", "z3disc"])
def test_extract_from_corpus_groupoids(name):
    C = corpus.COMPACT[name]()
    assert compact_groupoid_check(C)
    d = extract(C)
    assert verify_cocycle(d)
    assert d.G.n == C.base.n_objects


def test_extract_refuses_non_groupoid():
    with pytest.raises(Refused):
        extract(corpus.COMPACT["z2zero"]())


def test_skeletalize_non_skeletal():
    C = corpus.z2disc()
    P = split_idempotents(C, [C.id(0), C.id(0), C.id(1)])
    assert not is_skeletal(P)
    K, w = skeletalize(P)
    assert is_skeletal(K) and K.base.n_objects == 2
    assert check_equivalence_witness(P, K, w)
    assert data_equal(extract(P), extract(C))


def test_strictify_units_on_reconstruction():
    C = reconstruct(data(Z3, Z2))
    K, _ = strictify_units(C)
    assert all(K.lunit[a] == K.id(a) and K.runit[a] == K.id(a) for a in range(K.base.n_objects))
