import json

import pytest
from hypothesis import given, settings, strategies as st

from cptinv import corpus
from cptinv.cocycle import CocycleData, normalized_cocycles, trivial_action
from cptinv.compactdecomp import decompose_compact
from cptinv.errors import StructureError
from cptinv.finalg import InverseStructure, cyclic_group, inverse_structure, monoid_isomorphic
from cptinv.fincat import category_isomorphic
from cptinv.jarek import jarek_decompose
from cptinv.monoidal import compact_tables_equal
from cptinv.ordgpd import dewolf_pronk, esn_forward
from cptinv.semidiag import diagram_isomorphic
from cptinv.serialize import decode_label, dumps, encode_label, from_dict, loads, to_dict


def objects():
    out = {}
    for name in corpus.MONOIDS:
        out[f"monoid:{name}"] = corpus.MONOIDS[name]()
    for name in corpus.CATEGORIES:
        out[f"cat:{name}"] = corpus.CATEGORIES[name]()
    for name in corpus.COMPACT:
        out[f"compact:{name}"] = corpus.COMPACT[name]()
    for name, C in corpus.compact_inverse_items().items():
        out[f"diagram:{name}"] = decompose_compact(C)
    out["inverse:z2zero"] = inverse_structure(corpus.z2zero())
    out["esn:i2"] = esn_forward(inverse_structure(corpus.i2()))
    out["dwp:pinj2"] = dewolf_pronk(corpus.pinj2())
    out["abdiagram:z2zero"] = jarek_decompose(inverse_structure(corpus.z2zero()))
    Z2 = cyclic_group(2)
    for i, w in enumerate(normalized_cocycles(Z2, Z2)):
        out[f"cocycle:{i}"] = CocycleData(Z2, Z2, trivial_action(Z2, Z2), w)
    return out


OBJECTS = objects()


@pytest.mark.parametrize("key", sorted(OBJECTS))
def test_roundtrip_is_stable(key):
    text = dumps(OBJECTS[key])
    back = loads(text)
    assert type(back) is type(OBJECTS[key])
    assert dumps(back) == text


def test_roundtrip_preserves_structure():
    M = corpus.z2zero()
    assert monoid_isomorphic(loads(dumps(M)), M)
    I = loads(dumps(inverse_structure(M)))
    assert isinstance(I, InverseStructure) and I.dagger == (0, 1, 2)
    C = corpus.pinj2()
    assert category_isomorphic(loads(dumps(C)), C)
    K = corpus.COMPACT["frel01"]()
    assert compact_tables_equal(loads(dumps(K)), K)
    D = decompose_compact(K)
    assert diagram_isomorphic(loads(dumps(D)), D)


@settings(max_examples=100)
@given(st.recursive(st.one_of(st.integers(), st.text(max_size=4)),
                    lambda inner: st.tuples(inner, inner) | st.tuples(inner), max_leaves=8))
def test_labels_roundtrip_through_json(x):
    assert decode_label(json.loads(json.dumps(encode_label(x)))) == x


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"kind": "banana"}',
    '{"kind": "monoid"}',
    '{"kind": "monoid", "elements": ["e"], "unit": 0, "table": [[5]]}',
    '{"kind": "dagcat", "objects": ["A"], "morphisms": []}',
])
def test_malformed_input_is_a_structure_error(text):
    with pytest.raises(StructureError):
        loads(text)


def test_to_dict_rejects_unknown_types():
    with pytest.raises(TypeError):
        to_dict(object())
    assert from_dict(to_dict(cyclic_group(3))).n == 3
