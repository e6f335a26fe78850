from dataclasses import replace

import pytest

from cptinv import corpus
from cptinv.errors import Refused, StructureError
from cptinv.fincat import is_groupoid, is_inverse_category
from cptinv.monoidal import (compact_groupoid_check, compact_inverse_check, dimension, dual_morphism,
                             endo_collapse_check, idempotent_scalars, one_object, scalar_mult, subunit_order_check,
                             subunits, trace_big, trace_small, validate_compact)

COMPACT = {name: f() for name, f in corpus.COMPACT.items()}


def el(C, label):
    return C.base.labels.index(label)


@pytest.mark.parametrize("name", sorted(COMPACT))
def test_corpus_items_validate(name):
    assert validate_compact(COMPACT[name]) == []


def test_snake_violation_reported():
    C = corpus.one_object_compact(corpus.z2zero())
    bad = replace(C, eta=(el(C, "0"),), meta={})
    problems = validate_compact(bad)
    assert any("snake" in p for p in problems)


def test_ill_typed_unit_is_a_structure_error():
    C = corpus.zndisc(3)
    with pytest.raises(StructureError):
        replace(C, dual=(0, 1, 2), meta={})


def test_scalar_mult_examples():
    C = COMPACT["z4mult"]
    one = C.id(0)
    assert scalar_mult(C, el(C, 2), el(C, 3)) == el(C, 2)
    for f in range(C.base.n_morphisms):
        assert scalar_mult(C, one, f) == f


@pytest.mark.parametrize("name", sorted(COMPACT))
def test_scalar_mult_is_an_action(name):
    C = COMPACT[name]
    for s in C.scalars:
        for t in C.scalars:
            for f in range(C.base.n_morphisms):
                assert scalar_mult(C, s, scalar_mult(C, t, f)) == scalar_mult(C, C.comp(s, t), f)


def test_trace_examples():
    C = COMPACT["z4mult"]
    assert trace_big(C, C.id(C.unit)) == C.id(C.unit)
    assert trace_big(C, el(C, 2)) == el(C, 2)
    D = COMPACT["z2disc"]
    assert all(trace_big(D, D.id(a)) == D.id(D.unit) for a in range(2))


@pytest.mark.parametrize("name", sorted(COMPACT))
def test_duals(name):
    C = COMPACT[name]
    B = C.base
    for a in range(B.n_objects):
        assert dual_morphism(C, C.id(a)) == C.id(C.dual[a])
    for f in range(B.n_morphisms):
        assert dual_morphism(C, C.dag(f)) == C.dag(dual_morphism(C, f))
    if B.n_objects == 1:
        assert all(dual_morphism(C, s) == s for s in C.scalars)


def test_dimension_examples():
    C = COMPACT["z2disc"]
    assert dimension(C, C.unit) == C.id(C.unit)
    assert dimension(C, 1) == C.id(C.unit)
    for name, C in corpus.compact_inverse_items().items():
        for a in range(C.base.n_objects):
            s = dimension(C, a)
            assert C.comp(s, C.dag(s)) == s


@pytest.mark.parametrize("name", sorted(corpus.compact_inverse_items()))
def test_endo_collapse_on_compact_inverse_items(name):
    assert endo_collapse_check(COMPACT[name])


def test_endo_collapse_refuses_non_inverse_without_diagnostic():
    with pytest.raises(Refused):
        endo_collapse_check(COMPACT["z4mult"])


def test_endo_collapse_diagnostic_on_z4mult_holds():
    # one object, strict: f ⊗ id = f, so f = tr(f)•1 for every f
    C = COMPACT["z4mult"]
    assert endo_collapse_check(C, diagnostic=True)
    assert all(scalar_mult(C, trace_small(C, f), C.id(0)) == f for f in range(4))


@pytest.mark.parametrize("name", sorted(COMPACT))
def test_compact_inverse_check_agrees_with_inverse_category(name):
    C = COMPACT[name]
    assert compact_inverse_check(C).ok == is_inverse_category(C.base).ok


def test_compact_inverse_check_witness_z4mult():
    C = COMPACT["z4mult"]
    v = compact_inverse_check(C)
    assert not v and C.base.labels[v.witness] == 2


def test_compact_groupoid_examples():
    assert compact_groupoid_check(COMPACT["z2disc"])
    assert compact_groupoid_check(COMPACT["triv1"])
    assert not compact_groupoid_check(COMPACT["slat2"])


@pytest.mark.parametrize("name", sorted(corpus.compact_inverse_items()))
def test_compact_groupoid_agrees_with_groupoid(name):
    C = COMPACT[name]
    assert compact_groupoid_check(C).ok == is_groupoid(C.base).ok


def test_subunits_examples():
    G = COMPACT["z2disc"]
    cls = subunits(G)
    assert len(cls) == 1 and cls[0].idempotent == G.id(G.unit)
    C = COMPACT["z2zero"]
    (only,) = subunits(C)
    assert {C.base.labels[r] for r in only.members} == {"1", "a"}
    assert len(idempotent_scalars(C)) == 2
    # before splitting, the zero scalar has no subunit
    assert not subunit_order_check(C)


def test_one_object_refuses_noncommutative():
    with pytest.raises(Refused):
        one_object(corpus.i2())
