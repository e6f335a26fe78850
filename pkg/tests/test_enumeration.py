from itertools import permutations, product

import pytest

from cptinv.enumeration import (CLASSES, _abelian_groups, enumerate_monoids, enumerate_semilattices,
                                enumerate_via_jarek)
from cptinv.errors import Refused
from cptinv.finalg import FinMonoid, canonical_form, is_inverse, validate_monoid, validate_semilattice


def brute_classes(n):
    """Isomorphism classes of monoids with unit 0 by trying every table,
    keyed by the least table over unit-fixing relabellings."""
    others = list(range(1, n))
    cells = [(a, b) for a in others for b in others]
    perms = [[0, *p] for p in permutations(others)]
    seen = {}
    for vals in product(range(n), repeat=len(cells)):
        t = [[b if a == 0 else a if b == 0 else 0 for b in range(n)] for a in range(n)]
        for (a, b), v in zip(cells, vals):
            t[a][b] = v
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a in others for b in others for c in others):
            continue
        key = min(tuple(p.index(t[p[a]][p[b]]) for a in range(n) for b in range(n)) for p in perms)
        seen.setdefault(key, t)
    return [FinMonoid(tuple(range(n)), 0, t) for t in seen.values()]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_match_brute_force(n):
    oracle = brute_classes(n)
    assert len(enumerate_monoids(n)) == len(oracle)
    inv = [M for M in oracle if is_inverse(M)]
    assert len(enumerate_monoids(n, "inverse")) == len(inv)
    assert len(enumerate_monoids(n, "commutative-inverse")) == sum(M.is_commutative for M in inv)


def test_known_counts():
    assert [len(enumerate_monoids(n)) for n in range(1, 6)] == [1, 2, 7, 35, 228]
    assert [len(enumerate_monoids(n, "inverse")) for n in range(1, 6)] == [1, 2, 4, 11, 27]
    assert [len(enumerate_semilattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


@pytest.mark.parametrize("cls", CLASSES)
def test_results_are_valid_and_distinct(cls):
    for n in range(1, 5):
        items = enumerate_monoids(n, cls)
        assert all(validate_monoid(M) == [] for M in items)
        assert len({canonical_form(M) for M in items}) == len(items)
        if cls != "monoid":
            assert all(is_inverse(M) for M in items)
        if cls == "commutative-inverse":
            assert all(M.is_commutative for M in items)


def test_semilattices_are_semilattices():
    for n in range(1, 6):
        assert all(validate_semilattice(S.base) == [] for S in enumerate_semilattices(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_via_jarek_matches_table_search(n):
    a = {canonical_form(M) for M in enumerate_monoids(n, "commutative-inverse")}
    b = {canonical_form(M) for M in enumerate_via_jarek(n)}
    assert a == b and len(enumerate_via_jarek(n)) == len(a)


def test_abelian_group_counts():
    assert [len(_abelian_groups(m)) for m in range(1, 13)] == [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2]


def test_bound_and_class_refusals():
    with pytest.raises(Refused):
        enumerate_monoids(7)
    with pytest.raises(Refused):
        enumerate_monoids(0)
    with pytest.raises(Refused):
        enumerate_monoids(3, "group")
    assert len(enumerate_monoids(3, bound=3)) == 7
