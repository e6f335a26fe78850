"""JSON encodings of every structure, keyed by a "kind" field.

All values are index-encoded. Labels may be nested tuples or sets; they are
written as lists and read back as tuples.
"""

from __future__ import annotations

import json
from typing import Any

from .cocycle import CocycleData
from .errors import StructureError
from .finalg import FinMonoid, FinSemilattice, InverseStructure
from .fincat import DagCategory, Functor
from .jarek import AbGroupDiagram
from .monoidal import CompactStructure
from .ordgpd import LocallyCompleteIndGpd, OrderedGroupoid
from .semidiag import SemilatticeDiagram


# ---------------------------------------------------------------- labels

def encode_label(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, (frozenset, set)):
        return sorted((encode_label(v) for v in x), key=repr)
    if isinstance(x, (tuple, list)):
        return [encode_label(v) for v in x]
    return repr(x)


def decode_label(x):
    if isinstance(x, list):
        return tuple(decode_label(v) for v in x)
    return x


def _meta(meta: dict) -> dict:
    return {k: v for k, v in meta.items() if isinstance(v, (bool, int, str))}


# ---------------------------------------------------------------- encoders

def _monoid(M: FinMonoid, dagger=None) -> dict:
    out = {"kind": "monoid", "elements": [encode_label(e) for e in M.elements],
           "unit": M.unit, "table": [list(r) for r in M.table]}
    if dagger is not None:
        out["dagger"] = list(dagger)
    return out


def _dagcat(C: DagCategory) -> dict:
    return {
        "kind": "dagcat",
        "objects": [encode_label(o) for o in C.objects],
        "morphisms": [{"label": encode_label(C.labels[m]), "dom": C.dom[m], "cod": C.cod[m]}
                      for m in range(C.n_morphisms)],
        "identity": list(C.identity),
        "compose": [[g, f, h] for (g, f), h in sorted(C.compose.items())],
        "dagger": list(C.dagger),
    }


def _compact(C: CompactStructure) -> dict:
    out = _dagcat(C.base)
    no, nm = C.base.n_objects, C.base.n_morphisms
    out["monoidal"] = {
        "unit": C.unit,
        "tensor_obj": [[C.tensor_obj[(a, b)] for b in range(no)] for a in range(no)],
        "tensor_mor": [[C.tensor_mor[(f, g)] for g in range(nm)] for f in range(nm)],
        "assoc": [[[C.assoc[(a, b, c)] for c in range(no)] for b in range(no)] for a in range(no)],
        "lunit": list(C.lunit),
        "runit": list(C.runit),
        "symm": [[C.symm[(a, b)] for b in range(no)] for a in range(no)],
        "dual": list(C.dual),
        "eta": list(C.eta),
    }
    if _meta(C.meta):
        out["meta"] = _meta(C.meta)
    return out


def _ordgpd(G: OrderedGroupoid, blocks=None) -> dict:
    out = {
        "kind": "ordgpd",
        "groupoid": _dagcat(G.groupoid),
        "obj_order": sorted([a, b] for a, b in G.obj_order),
        "mor_order": sorted([f, g] for f, g in G.mor_order),
        "restriction": [[f, a, v] for (f, a), v in sorted(G.restriction.items())],
    }
    if blocks is not None:
        out["blocks"] = [list(b) for b in blocks]
    return out


def _abdiagram(D: AbGroupDiagram) -> dict:
    return {
        "kind": "abdiagram",
        "semilattice": _monoid(D.S.base),
        "fibers": {str(s): _monoid(F) for s, F in enumerate(D.fibers)},
        "restrict": [[s, t, list(m)] for (s, t), m in sorted(D.restrict.items())],
    }


def _sdiagram(D: SemilatticeDiagram) -> dict:
    out = {
        "kind": "sdiagram",
        "semilattice": _monoid(D.S.base),
        "compact": D.compact,
        "nested": D.nested,
        "padded": D.padded,
        "relaxed": D.relaxed,
        "fibers": {str(s): to_dict(F) for s, F in enumerate(D.fibers)},
        "restrict": [[s, t, {"obj": list(F.obj), "mor": list(F.mor)}]
                     for (s, t), F in sorted(D.restrict.items())],
    }
    if D.compact:
        out["psi"] = [[s, t, {"unit": p0, "pairs": [[a, b, m] for (a, b), m in sorted(pairs.items())]}]
                      for (s, t), (p0, pairs) in sorted(D.psi.items())]
    return out


def _cocycle(d: CocycleData) -> dict:
    return {
        "kind": "cocycle",
        "G": _monoid(d.G),
        "H": _monoid(d.H),
        "action": [list(r) for r in d.action],
        "omega": [[list(r) for r in m] for m in d.omega],
    }


def to_dict(obj) -> dict:
    if isinstance(obj, InverseStructure):
        return _monoid(obj.base, obj.dagger)
    if isinstance(obj, FinSemilattice):
        return _monoid(obj.base)
    if isinstance(obj, FinMonoid):
        return _monoid(obj)
    if isinstance(obj, CompactStructure):
        return _compact(obj)
    if isinstance(obj, DagCategory):
        return _dagcat(obj)
    if isinstance(obj, LocallyCompleteIndGpd):
        return _ordgpd(obj.base, obj.blocks)
    if isinstance(obj, OrderedGroupoid):
        return _ordgpd(obj)
    if isinstance(obj, AbGroupDiagram):
        return _abdiagram(obj)
    if isinstance(obj, SemilatticeDiagram):
        return _sdiagram(obj)
    if isinstance(obj, CocycleData):
        return _cocycle(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------- decoders

def _need(d: dict, *keys) -> None:
    if not isinstance(d, dict):
        raise StructureError(f"expected a JSON object, got {type(d).__name__}")
    for k in keys:
        if k not in d:
            raise StructureError(f"missing field {k!r} in {d.get('kind', 'object')}")


def _read_monoid(d: dict):
    _need(d, "elements", "unit", "table")
    M = FinMonoid(tuple(decode_label(e) for e in d["elements"]), d["unit"], d["table"])
    if "dagger" in d:
        return InverseStructure(M, d["dagger"])
    return M


def _plain_monoid(d: dict) -> FinMonoid:
    M = _read_monoid(d)
    return M.base if isinstance(M, InverseStructure) else M


def _read_dagcat(d: dict) -> DagCategory:
    _need(d, "objects", "morphisms", "identity", "compose", "dagger")
    ms = d["morphisms"]
    for m in ms:
        _need(m, "label", "dom", "cod")
    C = DagCategory(
        tuple(decode_label(o) for o in d["objects"]),
        tuple(decode_label(m["label"]) for m in ms),
        tuple(m["dom"] for m in ms),
        tuple(m["cod"] for m in ms),
        tuple(d["identity"]),
        {(g, f): h for g, f, h in d["compose"]},
        tuple(d["dagger"]),
    )
    if "monoidal" not in d:
        return C
    m = d["monoidal"]
    _need(m, "unit", "tensor_obj", "tensor_mor", "assoc", "lunit", "runit", "symm", "dual", "eta")
    no, nm = C.n_objects, C.n_morphisms
    return CompactStructure(
        C, m["unit"],
        {(a, b): m["tensor_obj"][a][b] for a in range(no) for b in range(no)},
        {(f, g): m["tensor_mor"][f][g] for f in range(nm) for g in range(nm)},
        {(a, b, c): m["assoc"][a][b][c] for a in range(no) for b in range(no) for c in range(no)},
        m["lunit"], m["runit"],
        {(a, b): m["symm"][a][b] for a in range(no) for b in range(no)},
        m["dual"], m["eta"], dict(d.get("meta", {})),
    )


def _read_ordgpd(d: dict):
    _need(d, "groupoid", "obj_order", "mor_order", "restriction")
    G = OrderedGroupoid(_read_dagcat(d["groupoid"]),
                        frozenset(map(tuple, d["obj_order"])),
                        frozenset(map(tuple, d["mor_order"])),
                        {(f, a): v for f, a, v in d["restriction"]})
    if "blocks" in d:
        return LocallyCompleteIndGpd(G, d["blocks"])
    return G


def _fibers(d: dict, read) -> list:
    fibers = d["fibers"]
    return [read(fibers[str(s)]) for s in range(len(fibers))]


def _read_abdiagram(d: dict) -> AbGroupDiagram:
    _need(d, "semilattice", "fibers", "restrict")
    return AbGroupDiagram(FinSemilattice(_plain_monoid(d["semilattice"])),
                          _fibers(d, _plain_monoid),
                          {(s, t): tuple(m) for s, t, m in d["restrict"]})


def _read_sdiagram(d: dict) -> SemilatticeDiagram:
    _need(d, "semilattice", "fibers", "restrict")
    restrict = {(s, t): Functor(tuple(F["obj"]), tuple(F["mor"])) for s, t, F in d["restrict"]}
    psi = {(s, t): (p["unit"], {(a, b): m for a, b, m in p["pairs"]}) for s, t, p in d.get("psi", [])}
    return SemilatticeDiagram(FinSemilattice(_plain_monoid(d["semilattice"])),
                              _fibers(d, _read_dagcat), restrict, psi,
                              relaxed=d.get("relaxed", False), nested=d.get("nested", False),
                              padded=d.get("padded", False))


def _read_cocycle(d: dict) -> CocycleData:
    _need(d, "G", "H", "action", "omega")
    return CocycleData(_plain_monoid(d["G"]), _plain_monoid(d["H"]), d["action"], d["omega"])


READERS = {
    "monoid": _read_monoid,
    "dagcat": _read_dagcat,
    "ordgpd": _read_ordgpd,
    "abdiagram": _read_abdiagram,
    "sdiagram": _read_sdiagram,
    "cocycle": _read_cocycle,
}


def from_dict(d: Any):
    """Inverse of :func:`to_dict`. Malformed input raises StructureError."""
    _need(d, "kind")
    reader = READERS.get(d["kind"])
    if reader is None:
        raise StructureError(f"unknown kind {d['kind']!r}")
    try:
        return reader(d)
    except StructureError:
        raise
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise StructureError(f"malformed {d['kind']}: {e!r}") from e


def dumps(obj) -> str:
    data = obj if isinstance(obj, dict) else to_dict(obj)
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"invalid JSON: {e}") from e
    return from_dict(data)
