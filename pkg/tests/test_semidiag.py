import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.enumeration import _abelian_groups, _diagrams, enumerate_semilattices
from cptinv.errors import Refused
from cptinv.finalg import FinSemilattice, chain, cyclic_group, inverse_structure, monoid_isomorphic
from cptinv.fincat import Functor, category_isomorphic, check_functor, endo_monoid, identity_functor
from cptinv.jarek import jarek_compose, jarek_decompose, jarek_morphism_decompose
from cptinv.semidiag import (DiagramMorphism, SemilatticeDiagram, check_diagram_morphism,
                             compose_inverse_category, diagram_isomorphic, diagram_morphism_to_functor,
                             from_abgroup_diagram, single_fiber, validate_diagram)


def jarek_diagram(M):
    return from_abgroup_diagram(jarek_decompose(inverse_structure(M)))


def two_chain(C, restrict=None):
    S = FinSemilattice(chain(2))
    F = identity_functor(C)
    return SemilatticeDiagram(S, (C, C), {(0, 0): F, (1, 1): F, (1, 0): restrict or F})


def as_diagram_morphism(m):
    return DiagramMorphism(m.phi, tuple(Functor((0,), th) for th in m.theta))


def small_abgroup_diagrams():
    groups = [G for m in (1, 2, 3) for G in _abelian_groups(m)]
    out = []
    for k in (1, 2):
        for S in enumerate_semilattices(k):
            for fs in ([(a,) for a in groups] if k == 1 else [(a, b) for a in groups for b in groups]):
                out.extend(_diagrams(S, fs))
    return out


SMALL = small_abgroup_diagrams()


@pytest.mark.parametrize("name", ["triv1", "slat2", "z2zero", "z2", "chain3", "z2xz2"])
def test_jarek_output_as_one_object_fibers_is_valid(name):
    assert validate_diagram(jarek_diagram(corpus.MONOIDS[name]())) == []


def test_non_functor_restriction_reported():
    Z2 = corpus.z2disc().base
    bad = two_chain(Z2, Functor((0, 1), (1, 1)))
    problems = validate_diagram(bad)
    assert problems and any("(1, 0)" in p for p in problems)


def test_restriction_must_exist_exactly_below():
    C = corpus.z2disc().base
    D = two_chain(C)
    broken = SemilatticeDiagram(D.S, D.fibers, {k: v for k, v in D.restrict.items() if k != (1, 0)})
    assert any("defined iff" in p for p in validate_diagram(broken))


def test_glue_single_fiber_is_the_fiber():
    C = corpus.z2disc().base
    assert category_isomorphic(compose_inverse_category(single_fiber(C)), C)


def test_glue_two_chain_doubles_homs():
    C = corpus.z2disc().base
    G = compose_inverse_category(two_chain(C))
    assert G.n_objects == 2 and len(G.endos(0)) == 2 and G.n_morphisms == 4


def test_glue_jarek_diagram_recovers_monoid():
    M = corpus.z2zero()
    G = compose_inverse_category(jarek_diagram(M))
    assert G.n_objects == 1
    assert monoid_isomorphic(endo_monoid(G, 0)[0], M)


def test_glue_refuses_non_groupoid_fiber():
    with pytest.raises(Refused):
        compose_inverse_category(single_fiber(corpus.pinj2()))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL))
def test_glue_agrees_with_jarek_compose(A):
    G = compose_inverse_category(from_abgroup_diagram(A))
    M, dagger = endo_monoid(G, 0)
    I = jarek_compose(A)
    iso = monoid_isomorphic(M, I.base)
    assert iso
    assert all(iso.witness[dagger[x]] == I.dagger[iso.witness[x]] for x in range(M.n))


def test_identity_morphism_gives_identity_functor():
    D = jarek_diagram(corpus.z2zero())
    m = DiagramMorphism(tuple(range(D.S.n)), tuple(identity_functor(D.cat(s)) for s in range(D.S.n)))
    assert check_diagram_morphism(m, D, D)
    F = diagram_morphism_to_functor(m, D, D)
    G = compose_inverse_category(D)
    assert F == identity_functor(G)


def test_collapse_morphism_gives_functor():
    M, L = corpus.z2zero(), corpus.slat2()
    I, J = inverse_structure(M), inverse_structure(L)
    collapse = (L.index("1"), L.index("1"), L.index("0"))
    m = as_diagram_morphism(jarek_morphism_decompose(collapse, I, J))
    D, E = jarek_diagram(M), jarek_diagram(L)
    F = diagram_morphism_to_functor(m, D, E)
    assert check_functor(F, compose_inverse_category(D), compose_inverse_category(E))


def test_quotient_z4_to_z2():
    D = single_fiber(corpus.one_object_compact(cyclic_group(4)).base)
    E = single_fiber(corpus.one_object_compact(cyclic_group(2)).base)
    m = DiagramMorphism((0,), (Functor((0,), (0, 1, 0, 1)),))
    F = diagram_morphism_to_functor(m, D, E)
    assert check_functor(F, compose_inverse_category(D), compose_inverse_category(E))
    with pytest.raises(Refused):
        diagram_morphism_to_functor(DiagramMorphism((0,), (Functor((0,), (0, 1, 1, 1)),)), D, E)


def test_diagram_isomorphic():
    D = jarek_diagram(corpus.z2zero())
    assert diagram_isomorphic(D, D)
    assert not diagram_isomorphic(D, jarek_diagram(corpus.slat2()))
    C = corpus.z2disc().base
    assert not diagram_isomorphic(two_chain(C), single_fiber(C))
