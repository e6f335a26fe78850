"""The twelve acceptance criteria.  Each test records one PASS/FAIL line,
printed in the terminal summary (and directly when run as a script)."""

import traceback
from itertools import product

from cptinv import corpus
from cptinv.cli import run_suite
from cptinv.cocycle import (CocycleData, cohomologous, data_equal, extract, normalized_cocycles, reconstruct,
                            trivial_action, trivial_cocycle, verify_cocycle)
from cptinv.compactdecomp import (decompose_compact, desk_diagrams, jarek_consistency, roundtrip_category,
                                  roundtrip_diagram)
from cptinv.constructions import (functor_category, functorcat_prediction, product as cat_product,
                                  product_prediction, split_idempotents, split_prediction)
from cptinv.enumeration import enumerate_monoids, enumerate_via_jarek
from cptinv.finalg import abelian_group, canonical_form, cyclic_group, inverse_structure
from cptinv.fincat import is_groupoid, is_inverse_category
from cptinv.jarek import commutative_inverse, jarek_roundtrip
from cptinv.monoidal import (compact_groupoid_check, compact_inverse_check, endo_collapse_check,
                             subunit_order_check, subunits, idempotent_scalars)
from cptinv.ordgpd import (block_comparability_check, dewolf_pronk, esn_forward, esn_roundtrip, is_inductive,
                           validate_locally_complete, validate_ordered_groupoid)

RESULTS: dict = {}


def record(n: int, title: str, body) -> None:
    try:
        body()
    except BaseException:
        RESULTS[n] = (False, title)
        print(f"ACCEPTANCE {n:2d} FAIL {title}")
        raise
    RESULTS[n] = (True, title)
    print(f"ACCEPTANCE {n:2d} PASS {title}")


def projections(C):
    B = C.base
    return [m for m in range(B.n_morphisms) if B.dom[m] == B.cod[m] and C.comp(m, m) == m and C.dag(m) == m]


COMPACT = {k: f() for k, f in corpus.COMPACT.items()}
INVERSE = corpus.compact_inverse_items()


# 1 ----------------------------------------------------------------------

def jarek_equality_roundtrip():
    for n in range(1, 7):
        for M in enumerate_monoids(n, "commutative-inverse"):
            v = jarek_roundtrip(commutative_inverse(M))
            assert v, (n, M.table, v.witness)


def test_criterion_01():
    record(1, "abelian-group decomposition round trip, commutative inverse monoids of order <= 6",
           jarek_equality_roundtrip)


# 2 ----------------------------------------------------------------------

def enumeration_cross_oracle():
    for n in range(1, 6):
        table = enumerate_monoids(n, "commutative-inverse")
        glued = enumerate_via_jarek(n)
        assert len(table) == len(glued), n
        assert {canonical_form(M) for M in table} == {canonical_form(M) for M in glued}, n


def test_criterion_02():
    record(2, "table search and gluing generator agree for n <= 5", enumeration_cross_oracle)


# 3 ----------------------------------------------------------------------

def esn_sweep():
    items = [M for n in range(1, 6) for M in enumerate_monoids(n, "inverse")] + [corpus.i2()]
    for M in items:
        I = inverse_structure(M)
        G = esn_forward(I)
        assert validate_ordered_groupoid(G) == [], M.table
        assert is_inductive(G), M.table
        assert esn_roundtrip(I), M.table


def test_criterion_03():
    record(3, "inductive groupoid laws and round trip, inverse monoids of order <= 5 and i2", esn_sweep)


# 4 ----------------------------------------------------------------------

def dewolf_pronk_pinj2():
    L = dewolf_pronk(corpus.pinj2())
    assert validate_locally_complete(L) == []
    assert block_comparability_check(L)
    G = L.base
    where = {a: i for i, blk in enumerate(L.blocks) for a in blk}
    for a, b in product(range(G.groupoid.n_objects), repeat=2):
        if where[a] != where[b]:
            assert not G.obj_leq(a, b)


def test_criterion_04():
    record(4, "locally complete groupoid of pinj2, comparability exactly within blocks", dewolf_pronk_pinj2)


# 5 ----------------------------------------------------------------------

def endo_collapse_and_inverse_agreement():
    for name, C in INVERSE.items():
        assert endo_collapse_check(C), name
    for name, C in COMPACT.items():
        assert compact_inverse_check(C).ok == is_inverse_category(C.base).ok, name
    C = COMPACT["z4mult"]
    v = compact_inverse_check(C)
    assert not v and C.base.labels[v.witness] == 2
    assert not compact_inverse_check(COMPACT["z2disc_x_z4mult"])
    F = corpus.frel2()
    v = is_inverse_category(F)
    assert not v and set(F.labels[v.witness[1]]) == {(0, 0), (0, 1), (1, 0)}


def test_criterion_05():
    record(5, "endomorphism collapse and compact inverse characterisation", endo_collapse_and_inverse_agreement)


# 6 ----------------------------------------------------------------------

def groupoid_agreement():
    for name, C in INVERSE.items():
        assert compact_groupoid_check(C).ok == is_groupoid(C.base).ok, name


def test_criterion_06():
    record(6, "compact groupoid characterisation agrees with is_groupoid", groupoid_agreement)


# 7 ----------------------------------------------------------------------

def compact_roundtrips():
    for name, C in INVERSE.items():
        assert roundtrip_category(C), name
    count = 0
    for name, D in desk_diagrams():
        v = roundtrip_diagram(D)
        assert v, (name, v.witness)
        count += 1
    assert count == 2070


def test_criterion_07():
    record(7, "category-first round trips on the corpus, diagram-first on 2070 desk diagrams", compact_roundtrips)


# 8 ----------------------------------------------------------------------

def one_object_consistency():
    items = {k: C for k, C in INVERSE.items() if C.base.n_objects == 1}
    assert len(items) >= 5
    for name, C in items.items():
        assert jarek_consistency(C), name


def test_criterion_08():
    record(8, "one-object compact decomposition matches the abelian-group decomposition",
           one_object_consistency)


# 9 ----------------------------------------------------------------------

def constructions():
    for name in ("z2zero", "slat2", "frel01", "z2zero_x_z2zero", "z2disc_x_z2zero"):
        C = COMPACT[name]
        P = split_idempotents(C, projections(C))
        assert compact_inverse_check(P), name
        assert split_prediction(C, P), name
    for a, b in (("z2disc", "z2zero"), ("slat2", "z2zero"), ("z2", "z3disc"), ("frel01", "slat2")):
        C, D = COMPACT[a], COMPACT[b]
        CD = cat_product(C, D)
        assert compact_inverse_check(CD), (a, b)
        assert product_prediction(C, D, CD), (a, b)
    for g, c in (("z2", "z2zero"), ("z2disc", "slat2"), ("z3", "z2zero"), ("triv1", "frel01")):
        G, C = COMPACT[g].base, COMPACT[c]
        FC = functor_category(G, C)
        assert compact_inverse_check(FC), (g, c)
        assert functorcat_prediction(G, C, FC), (g, c)


def test_criterion_09():
    record(9, "split, product and functor-category constructions with predicted decompositions", constructions)


# 10 ---------------------------------------------------------------------

def cocycles():
    for name, C in COMPACT.items():
        if corpus.EXPECTED[name]["groupoid"]:
            assert verify_cocycle(extract(C)), name
    groups = {"Z2": cyclic_group(2), "Z3": cyclic_group(3), "V4": abelian_group(2, 2)}
    for (gn, G), (hn, H) in product(groups.items(), repeat=2):
        small = G.n <= 3 and H.n <= 3
        act = trivial_action(G, H)
        count = 0
        for w in normalized_cocycles(G, H):
            d = CocycleData(G, H, act, w)
            C = reconstruct(d)
            checked = small or count < 3
            back = extract(C, check=checked)
            assert data_equal(back, d), (gn, hn, count)
            count += 1
        assert count > 0, (gn, hn)
    Z2 = groups["Z2"]
    t = CocycleData(Z2, Z2, trivial_action(Z2, Z2), trivial_cocycle(Z2, Z2))
    (w,) = [w for w in normalized_cocycles(Z2, Z2) if w != t.omega]
    assert not cohomologous(CocycleData(Z2, Z2, t.action, w), t)


def test_criterion_10():
    record(10, "cocycle extraction, reconstruct/extract over Z2, Z3, Z2xZ2, nontrivial Z2 class", cocycles)


# 11 ---------------------------------------------------------------------

def split_subunits():
    C = COMPACT["z2zero"]
    P = split_idempotents(C, projections(C))
    assert len(subunits(P)) == len(idempotent_scalars(P)) == 2
    assert subunit_order_check(P)


def test_criterion_11():
    record(11, "subunits of split z2zero match the idempotent scalars in order", split_subunits)


# 12 ---------------------------------------------------------------------

def determinism():
    a, b = run_suite(jobs=1, seed=0), run_suite(jobs=4, seed=1)
    assert a.ok
    assert a.to_json().encode() == b.to_json().encode()
    assert a.to_text().encode() == b.to_text().encode()


def test_criterion_12():
    record(12, "suite reports byte-identical across thread counts", determinism)


if __name__ == "__main__":
    for n, f in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            f()
        except BaseException:
            traceback.print_exc()
