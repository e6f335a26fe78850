import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.errors import StructureError
from cptinv.finalg import cyclic_group
from cptinv.fincat import (DagCategory, Functor, category_isomorphic, dagger_functor_check, from_monoid,
                           identity_functor, is_groupoid, is_inverse_category, relabel_category,
                           search_dagger, validate_category)


def relation_oracle_first_failure(C):
    """First morphism f (by index) with f ≠ f f† f, computed on the relation
    labels directly."""
    def comp(s, r):
        return {(x, z) for x, y in r for y2, z in s if y == y2}

    for f in range(C.n_morphisms):
        r = set(C.labels[f])
        conv = {(y, x) for x, y in r}
        if comp(r, comp(conv, r)) != r:
            return f
    return None


def test_validate_category_examples():
    C = from_monoid(corpus.z2zero(), (0, 1, 2))
    assert validate_category(C) == []
    assert validate_category(corpus.z2disc().base) == []


def test_dagger_violation_reported():
    # g† = g, (g²)† = g is not an involution
    M = cyclic_group(3)
    bad = from_monoid(M, (0, 1, 1))
    problems = validate_category(bad)
    assert any("involutive" in p or "f†∘g†" in p for p in problems)


def test_structure_errors():
    with pytest.raises(StructureError):
        DagCategory(("A",), ("f",), (0,), (1,), (0,), {}, (0,))
    with pytest.raises(StructureError):
        DagCategory(("A", "B"), ("a", "b"), (0, 1), (0, 1), (0, 1), {(0, 1): 0}, (0, 1))


def test_inverse_category_examples():
    assert is_inverse_category(corpus.pinj2())
    v = is_inverse_category(corpus.frel2())
    assert not v
    C = corpus.frel2()
    f = v.witness[1]
    assert f == relation_oracle_first_failure(C)
    assert set(C.labels[f]) == {(0, 0), (0, 1), (1, 0)}
    assert is_inverse_category(corpus.z2disc().base)
    assert is_inverse_category(from_monoid(cyclic_group(4), (0, 3, 2, 1)))


def test_groupoid_examples():
    assert is_groupoid(corpus.z2disc().base)
    C = corpus.pinj2()
    v = is_groupoid(C)
    assert not v and C.labels[v.witness] == ()
    assert is_groupoid(from_monoid(cyclic_group(3), (0, 2, 1)))


def test_search_dagger_recovers_pinj2_dagger():
    C = corpus.pinj2()
    assert search_dagger(C) == C.dagger


def test_functor_checks():
    C = corpus.pinj2()
    assert dagger_functor_check(identity_functor(C), C, C)
    T = from_monoid(corpus.triv1())
    const = Functor((0,) * C.n_objects, (0,) * C.n_morphisms)
    assert dagger_functor_check(const, C, T)
    Z3 = from_monoid(cyclic_group(3), (0, 2, 1))
    bad = Functor((0,), (0, 1, 1))
    v = dagger_functor_check(bad, Z3, Z3)
    assert not v and v.witness[0] in ("composition", "dagger")


PINJ2 = corpus.pinj2()


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(PINJ2.n_morphisms)))
def test_relabelled_category_is_isomorphic(order):
    C = PINJ2
    D = relabel_category(C, order)
    assert validate_category(D) == []
    assert category_isomorphic(C, D)


def test_antihomomorphism_violation_reported():
    # identity involution on a non-commutative monoid: (gf)† = gf ≠ fg = f†g†
    M = corpus.i2()
    bad = from_monoid(M, range(M.n))
    problems = validate_category(bad)
    assert problems and all("f†∘g†" in p for p in problems)
