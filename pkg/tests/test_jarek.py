import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.enumeration import _abelian_groups, _diagrams, enumerate_semilattices
from cptinv.errors import Refused
from cptinv.finalg import (FinSemilattice, chain, cyclic_group, inverse_structure, monoid_isomorphic,
                           validate_inverse)
from cptinv.jarek import (AbGroupDiagram, abdiagram_isomorphic, check_jarek_morphism, compose_jarek_morphisms,
                          jarek_compose, jarek_decompose, jarek_morphism_compose, jarek_morphism_decompose,
                          jarek_roundtrip, jarek_roundtrip_diagram, single_fiber, validate_abdiagram)


def two_chain_z2(identity_restrict: bool) -> AbGroupDiagram:
    S = FinSemilattice(chain(2))
    Z2 = cyclic_group(2)
    r = (0, 1) if identity_restrict else (0, 0)
    return AbGroupDiagram(S, (Z2, Z2), {(0, 0): (0, 1), (1, 1): (0, 1), (1, 0): r})


def small_diagrams():
    """Every diagram over semilattices of order ≤ 3 with fibers of order ≤ 3."""
    groups = [G for m in (1, 2, 3) for G in _abelian_groups(m)]
    out = []
    for k in (1, 2, 3):
        for S in enumerate_semilattices(k):
            def fibers(i):
                if i == k:
                    yield ()
                    return
                for G in groups:
                    for rest in fibers(i + 1):
                        yield (G,) + rest
            for fs in fibers(0):
                out.extend(_diagrams(S, fs))
    return out


SMALL = small_diagrams()


def test_decompose_z2zero():
    M = corpus.z2zero()
    D = jarek_decompose(inverse_structure(M))
    assert validate_abdiagram(D) == []
    assert D.S.n == 2 and D.S.leq(1, 0)
    assert [F.n for F in D.fibers] == [2, 1]
    assert monoid_isomorphic(D.fibers[0], cyclic_group(2))
    assert D.restrict[(1, 0)] == (0, 0)


def test_decompose_group_and_semilattice():
    D = jarek_decompose(inverse_structure(cyclic_group(3)))
    assert D.S.n == 1 and monoid_isomorphic(D.fibers[0], cyclic_group(3))
    D = jarek_decompose(inverse_structure(corpus.slat2()))
    assert all(F.n == 1 for F in D.fibers)


def test_decompose_refuses_noncommutative():
    with pytest.raises(Refused):
        jarek_decompose(inverse_structure(corpus.i2()))


def test_compose_examples():
    M = corpus.z2zero()
    assert monoid_isomorphic(jarek_compose(jarek_decompose(inverse_structure(M))).base, M)
    I = jarek_compose(two_chain_z2(True))
    assert I.base.n == 4 and validate_inverse(I) == [] and I.base.is_commutative
    assert monoid_isomorphic(jarek_compose(single_fiber(cyclic_group(2))).base, cyclic_group(2))


@pytest.mark.parametrize("name", ["triv1", "slat2", "z2zero", "z2", "z3", "z4", "z2xz2", "chain3"])
def test_roundtrip_on_corpus(name):
    assert jarek_roundtrip(inverse_structure(corpus.MONOIDS[name]()))


def test_morphism_identity():
    I = inverse_structure(corpus.z2zero())
    m = jarek_morphism_decompose(range(3), I, I)
    D = jarek_decompose(I)
    assert m.phi == tuple(range(D.S.n))
    assert all(th == tuple(range(F.n)) for th, F in zip(m.theta, D.fibers))


def test_morphism_collapse_and_inclusion():
    M, L = corpus.z2zero(), corpus.slat2()
    I, J = inverse_structure(M), inverse_structure(L)
    collapse = (L.index("1"), L.index("1"), L.index("0"))
    m = jarek_morphism_decompose(collapse, I, J)
    D, E = jarek_decompose(I), jarek_decompose(J)
    assert check_jarek_morphism(m, D, E)
    assert m.phi == (0, 1) and m.theta[0] == (0, 0)
    Z2 = cyclic_group(2)
    inc = (M.index("1"), M.index("a"))
    m = jarek_morphism_decompose(inc, inverse_structure(Z2), I)
    assert m.phi == (0,) and len(set(m.theta[0])) == 2
    # back to homomorphisms of the composites, and composition
    f = jarek_morphism_compose(m, jarek_decompose(inverse_structure(Z2)), D)
    assert len(set(f)) == 2
    assert check_jarek_morphism(compose_jarek_morphisms(jarek_morphism_decompose(collapse, I, J), m),
                                jarek_decompose(inverse_structure(Z2)), E)


def test_morphism_refuses_non_homomorphism():
    I = inverse_structure(corpus.z2zero())
    with pytest.raises(Refused):
        jarek_morphism_decompose((0, 2, 1), I, I)


def test_small_diagram_sweep_roundtrips():
    # |Hom| between 1, Z2, Z3 is h = [[1,1,1],[1,2,1],[1,1,3]]: 3 one-point
    # diagrams, sum(h) = 12 over the 2-chain, sum(h²) = 50 over the 3-chain
    assert len(SMALL) == 65
    for D in SMALL:
        assert validate_abdiagram(D) == []
        assert jarek_roundtrip_diagram(D)


def test_single_point_roundtrip_is_on_the_nose():
    D = single_fiber(cyclic_group(3))
    v = jarek_roundtrip_diagram(D)
    assert v and v.witness.phi == (0,) and v.witness.theta == ((0, 1, 2),)


def test_trivial_and_identity_restrictions_differ():
    A, B = two_chain_z2(False), two_chain_z2(True)
    assert jarek_roundtrip_diagram(A) and jarek_roundtrip_diagram(B)
    assert not abdiagram_isomorphic(A, B)
    assert abdiagram_isomorphic(A, A)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, len(SMALL) - 1), st.integers(0, len(SMALL) - 1))
def test_diagram_iso_matches_composite_iso(i, j):
    D, E = SMALL[i], SMALL[j]
    same_diagram = abdiagram_isomorphic(D, E).ok
    same_monoid = monoid_isomorphic(jarek_compose(D).base, jarek_compose(E).base).ok
    assert same_diagram == same_monoid
