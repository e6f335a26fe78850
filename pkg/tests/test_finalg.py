from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.enumeration import enumerate_monoids
from cptinv.errors import Refused, StructureError
from cptinv.finalg import (FinMonoid, abelian_group, canonical_form, cyclic_group, idempotent_semilattice,
                           inverse_structure, is_inverse, monoid_isomorphic, natural_order,
                           validate_inverse, validate_monoid, validate_semilattice)


def brute_canonical(M):
    """Least flattened table over all unit-fixing relabellings."""
    others = [x for x in range(M.n) if x != M.unit]
    best = None
    for perm in permutations(others):
        order = [M.unit, *perm]
        pos = {old: new for new, old in enumerate(order)}
        flat = tuple(pos[M.table[a][b]] for a in order for b in order)
        best = flat if best is None or flat < best else best
    return best


def test_validate_monoid_examples():
    assert validate_monoid(corpus.triv1()) == []
    assert validate_monoid(corpus.z2zero()) == []
    bad = FinMonoid(("e", "x"), 0, [[0, 0], [1, 1]])
    unit_errors = [p for p in validate_monoid(bad) if p.startswith("unit law")]
    assert len(unit_errors) == 1


def test_malformed_tables_raise():
    with pytest.raises(StructureError):
        FinMonoid(("a", "b"), 0, [[0, 1]])
    with pytest.raises(StructureError):
        FinMonoid(("a",), 0, [[3]])


def test_inverse_structure_examples():
    M = corpus.z2zero()
    I = inverse_structure(M)
    assert I.dagger == (0, 1, 2)
    Z5 = cyclic_group(5)
    assert inverse_structure(Z5).dagger == tuple((-x) % 5 for x in range(5))
    with pytest.raises(Refused) as err:
        inverse_structure(corpus.z4mult())
    assert corpus.z4mult().elements[err.value.witness] == 2


def test_idempotent_semilattice_examples():
    S = idempotent_semilattice(inverse_structure(corpus.z2zero()))
    labels = [corpus.z2zero().elements[x] for x in S.carrier]
    assert labels == ["1", "0"]
    assert S.leq(1, 0) and not S.leq(0, 1)
    assert idempotent_semilattice(inverse_structure(cyclic_group(3))).n == 1
    assert idempotent_semilattice(inverse_structure(corpus.slat2())).n == 2


def test_natural_order_examples():
    M = corpus.z2zero()
    order = natural_order(inverse_structure(M))
    lab = {(M.elements[x], M.elements[y]) for x, y in order}
    assert lab == {("1", "1"), ("a", "a"), ("0", "0"), ("0", "1"), ("0", "a")}
    Z4 = cyclic_group(4)
    assert natural_order(inverse_structure(Z4)) == {(x, x) for x in range(4)}
    I2 = corpus.i2()
    empty = I2.elements.index(())
    order = natural_order(inverse_structure(I2))
    assert all((empty, y) in order for y in range(I2.n))
    assert I2.n == 7


def test_monoid_isomorphic_examples():
    M = corpus.z2zero()
    assert monoid_isomorphic(M, M.relabel([2, 0, 1]))
    assert not monoid_isomorphic(cyclic_group(4), abelian_group(2, 2))
    assert not monoid_isomorphic(corpus.triv1(), corpus.slat2())


def test_semilattice_validation():
    assert validate_semilattice(corpus.slat2()) == []
    assert validate_semilattice(cyclic_group(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_canonical_form_agrees_with_brute_force(n):
    items = enumerate_monoids(n)
    forms = [canonical_form(M) for M in items]
    brutes = [brute_canonical(M) for M in items]
    assert len(set(forms)) == len(items)
    assert len(set(brutes)) == len(items)


@st.composite
def relabelled(draw):
    n = draw(st.integers(1, 4))
    items = enumerate_monoids(n)
    M = items[draw(st.integers(0, len(items) - 1))]
    order = draw(st.permutations(range(M.n)))
    return M, M.relabel(order)


@settings(max_examples=60, deadline=None)
@given(relabelled())
def test_relabelling_preserves_canonical_form_and_isomorphism(pair):
    M, N = pair
    assert canonical_form(M) == canonical_form(N)
    iso = monoid_isomorphic(M, N)
    assert iso
    f = iso.witness
    assert all(f[M.mul(a, b)] == N.mul(f[a], f[b]) for a in range(M.n) for b in range(M.n))


@settings(max_examples=40, deadline=None)
@given(relabelled())
def test_inverse_laws_on_enumerated_monoids(pair):
    M, _ = pair
    if is_inverse(M):
        assert validate_inverse(inverse_structure(M)) == []
