"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 refused
precondition.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import corpus, serialize
from .cocycle import (CocycleData, cohomologous, data_equal, extract, find_symmetry, normalized_cocycles,
                      reconstruct, trivial_action, trivial_cocycle, verify_cocycle)
from .compactdecomp import (compose_compact, decompose_compact, desk_diagrams, jarek_consistency,
                            roundtrip_category, roundtrip_diagram)
from .constructions import (check_padding, functor_category, functorcat_prediction, pad_objects,
                            product, product_prediction, split_idempotents, split_prediction)
from .enumeration import CLASSES, enumerate_monoids, enumerate_via_jarek
from .errors import Refused, StructureError, Verdict
from .finalg import (FinMonoid, FinSemilattice, InverseStructure, cyclic_group, inverse_structure, is_inverse,
                     validate_inverse, validate_monoid, validate_semilattice)
from .fincat import DagCategory, endo_monoid, is_groupoid, is_inverse_category, validate_category
from .jarek import (AbGroupDiagram, jarek_compose, jarek_decompose, jarek_roundtrip,
                    jarek_roundtrip_diagram, validate_abdiagram)
from .monoidal import (CompactStructure, compact_groupoid_check, compact_inverse_check,
                       endo_collapse_check, subunit_order_check, validate_compact)
from .ordgpd import (LocallyCompleteIndGpd, OrderedGroupoid, block_comparability_check, dewolf_pronk,
                     esn_forward, esn_reverse, esn_roundtrip, is_inductive, validate_locally_complete,
                     validate_ordered_groupoid)
from .report import Report
from .semidiag import SemilatticeDiagram, compose_inverse_category, validate_diagram

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3


# ---------------------------------------------------------------- input

def load(path: str | None):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise StructureError(f"cannot read {path}: {e.strerror}") from e
    return serialize.loads(text)


def as_inverse(obj) -> InverseStructure:
    """Inverse monoids, plain monoids that happen to be inverse, and
    one-object dagger categories all read as inverse monoids."""
    if isinstance(obj, InverseStructure):
        return obj
    if isinstance(obj, FinMonoid):
        return inverse_structure(obj)
    if isinstance(obj, CompactStructure):
        obj = obj.base
    if isinstance(obj, DagCategory):
        if obj.n_objects != 1:
            raise Refused("a monoid view needs a one-object category", obj.n_objects)
        inv = is_inverse_category(obj)
        if not inv:
            raise Refused("the category is not inverse", inv.witness)
        return InverseStructure(*endo_monoid(obj, 0))
    raise Refused(f"expected a monoid, got {serialize.to_dict(obj)['kind']}")


def _need(obj, cls, what: str):
    if not isinstance(obj, cls):
        raise Refused(f"expected {what}")
    return obj


# ---------------------------------------------------------------- commands

def validation_checks(obj, rep: Report) -> None:
    def problems(id, ps):
        rep.add(id, Verdict(not ps, ps[0] if ps else None))

    if isinstance(obj, InverseStructure):
        problems("validate.monoid", validate_monoid(obj.base))
        problems("validate.inverse", validate_inverse(obj))
    elif isinstance(obj, FinMonoid):
        problems("validate.monoid", validate_monoid(obj))
    elif isinstance(obj, CompactStructure):
        problems("validate.dagcat", validate_category(obj.base))
        problems("validate.compact", validate_compact(obj))
    elif isinstance(obj, DagCategory):
        problems("validate.dagcat", validate_category(obj))
    elif isinstance(obj, LocallyCompleteIndGpd):
        problems("validate.locally_complete", validate_locally_complete(obj))
    elif isinstance(obj, OrderedGroupoid):
        problems("validate.ordgpd", validate_ordered_groupoid(obj))
    elif isinstance(obj, AbGroupDiagram):
        problems("validate.abdiagram", validate_abdiagram(obj))
    elif isinstance(obj, SemilatticeDiagram):
        problems("validate.sdiagram", validate_diagram(obj))
    elif isinstance(obj, CocycleData):
        rep.add("validate.cocycle", verify_cocycle(obj))


def cmd_validate(args):
    rep = Report("validate")
    validation_checks(load(args.file), rep)
    return rep


def flags(obj) -> dict:
    if isinstance(obj, InverseStructure):
        obj = obj.base
    if isinstance(obj, FinMonoid):
        return {
            "commutative": obj.is_commutative,
            "inverse": is_inverse(obj),
            "semilattice": not validate_semilattice(obj),
            "group": all(any(obj.mul(x, y) == obj.unit == obj.mul(y, x) for y in range(obj.n))
                         for x in range(obj.n)),
            "order": obj.n,
        }
    if isinstance(obj, CompactStructure):
        out = flags(obj.base)
        out["compact"] = not validate_compact(obj)
        if out["compact"]:
            out["compact_inverse"] = compact_inverse_check(obj).ok
            out["compact_groupoid"] = compact_groupoid_check(obj).ok
        return out
    if isinstance(obj, DagCategory):
        return {
            "objects": obj.n_objects,
            "morphisms": obj.n_morphisms,
            "inverse": is_inverse_category(obj).ok,
            "groupoid": is_groupoid(obj).ok,
        }
    if isinstance(obj, OrderedGroupoid):
        return {"inductive": is_inductive(obj).ok}
    if isinstance(obj, LocallyCompleteIndGpd):
        return {"blocks": len(obj.blocks)}
    if isinstance(obj, (AbGroupDiagram, SemilatticeDiagram)):
        return {"semilattice_order": obj.S.n}
    if isinstance(obj, CocycleData):
        return {"G": obj.G.n, "H": obj.H.n, "abelian": obj.is_abelian}
    return {}


def cmd_analyze(args):
    obj = load(args.file)
    rep = Report("analyze")
    validation_checks(obj, rep)
    if rep.ok:
        rep.stats["flags"] = flags(obj)
    return rep


def _default_mode(obj) -> str:
    if isinstance(obj, CompactStructure):
        return "compact"
    if isinstance(obj, DagCategory):
        return "dwp"
    M = obj.base if isinstance(obj, InverseStructure) else obj
    return "jarek" if isinstance(M, FinMonoid) and M.is_commutative else "esn"


def cmd_decompose(args):
    obj = load(args.file)
    mode = args.mode or _default_mode(obj)
    if mode == "jarek":
        return jarek_decompose(as_inverse(obj))
    if mode == "esn":
        return esn_forward(as_inverse(obj))
    if mode == "dwp":
        C = obj.base if isinstance(obj, CompactStructure) else obj
        return dewolf_pronk(_need(C, DagCategory, "a dagger category"))
    return decompose_compact(_need(obj, CompactStructure, "a compact dagger category"))


def cmd_compose(args):
    obj = load(args.file)
    if isinstance(obj, AbGroupDiagram):
        return jarek_compose(obj)
    if isinstance(obj, LocallyCompleteIndGpd):
        obj = obj.base
    if isinstance(obj, OrderedGroupoid):
        return esn_reverse(obj)
    D = _need(obj, SemilatticeDiagram, "a diagram or an ordered groupoid")
    return compose_compact(D) if D.compact else compose_inverse_category(D)


def cmd_roundtrip(args):
    obj = load(args.file)
    mode = args.mode or _default_mode(obj)
    rep = Report("roundtrip")
    if mode == "jarek":
        if isinstance(obj, AbGroupDiagram):
            rep.add("jarek.roundtrip_diagram", jarek_roundtrip_diagram(obj))
        else:
            rep.add("jarek.roundtrip", jarek_roundtrip(as_inverse(obj)))
    elif mode == "esn":
        rep.add("esn.roundtrip", esn_roundtrip(as_inverse(obj)))
    elif mode == "dwp":
        C = obj.base if isinstance(obj, CompactStructure) else _need(obj, DagCategory, "a dagger category")
        L = dewolf_pronk(C)
        rep.add("dwp.locally_complete", Verdict(not validate_locally_complete(L)))
        rep.add("dwp.block_comparability", block_comparability_check(L))
    elif isinstance(obj, SemilatticeDiagram):
        rep.add("compact.roundtrip_diagram", roundtrip_diagram(obj))
    else:
        rep.add("compact.roundtrip_category",
                roundtrip_category(_need(obj, CompactStructure, "a compact dagger category")))
    return rep


def cmd_cocycle(args):
    objs = [load(f) for f in args.files or ["-"]]
    if args.action in ("extract", "build", "verify") and len(objs) != 1:
        raise StructureError(f"cocycle {args.action} takes one file")
    if args.action == "compare" and len(objs) != 2:
        raise StructureError("cocycle compare takes two files")
    if args.action == "extract":
        return extract(_need(objs[0], CompactStructure, "a compact groupoid"))
    d = [_need(o, CocycleData, "cocycle data") for o in objs]
    if args.action == "build":
        return reconstruct(d[0])
    rep = Report(f"cocycle {args.action}")
    if args.action == "verify":
        rep.add("cocycle.identity", verify_cocycle(d[0]))
        if rep.ok and d[0].is_abelian:
            rep.stats["symmetric"] = reconstruct(d[0]).meta["symmetric"]
            if args.search_symmetry:
                rep.stats["symmetry_exists"] = find_symmetry(d[0]).ok
        return rep
    rep.add("cocycle.cohomologous", cohomologous(d[0], d[1]))
    return rep


def _index_list(text: str | None):
    if text is None:
        return None
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise StructureError(f"expected comma-separated indices, got {text!r}") from e


def cmd_construct(args):
    objs = [load(f) for f in args.files or ["-"]]
    need = {"split": 1, "product": 2, "functorcat": 2, "pad": 1}[args.kind]
    if len(objs) != need:
        raise StructureError(f"construct {args.kind} takes {need} file(s)")
    rep = Report(f"construct {args.kind}")
    if args.kind == "split":
        C = _need(objs[0], CompactStructure, "a compact dagger category")
        S = _index_list(args.idempotents)
        if S is None:
            S = _projections(C)
        out = split_idempotents(C, S)
        checks = [("split.compact_inverse", lambda: compact_inverse_check(out)),
                  ("split.prediction", lambda: split_prediction(C, out))]
    elif args.kind == "product":
        C, D = (_need(o, CompactStructure, "compact dagger categories") for o in objs)
        out = product(C, D)
        checks = [("product.compact_inverse", lambda: compact_inverse_check(out)),
                  ("product.prediction", lambda: product_prediction(C, D, out))]
    elif args.kind == "functorcat":
        G = objs[0].base if isinstance(objs[0], CompactStructure) else objs[0]
        G = _need(G, DagCategory, "a dagger groupoid as the first file")
        C = _need(objs[1], CompactStructure, "a compact dagger category as the second file")
        out = functor_category(G, C)
        checks = [("functorcat.compact_inverse", lambda: compact_inverse_check(out)),
                  ("functorcat.prediction", lambda: functorcat_prediction(G, C, out))]
    else:
        obj = objs[0]
        D = decompose_compact(obj) if isinstance(obj, CompactStructure) else obj
        D = _need(D, SemilatticeDiagram, "a compact diagram or category")
        out = pad_objects(D)
        checks = [("pad.validate", lambda: Verdict(not validate_diagram(out))),
                  ("pad.equivalence", lambda: check_padding(D, out))]
    if not args.check:
        return out
    for id, f in checks:
        rep.add(id, f())
    return rep


def cmd_enumerate(args):
    if args.via_jarek:
        args.cls = args.cls or "commutative-inverse"
        if args.cls != "commutative-inverse":
            raise Refused("the gluing generator only produces commutative inverse monoids")
        items = enumerate_via_jarek(args.order, bound=args.bound)
    else:
        args.cls = args.cls or "monoid"
        items = enumerate_monoids(args.order, args.cls, bound=args.bound)
    return {"kind": "enumeration", "order": args.order, "class": args.cls,
            "count": len(items), "items": [serialize.to_dict(M) for M in items]}


def cmd_corpus(args):
    if args.name is None:
        names = sorted(set(corpus.COMPACT) | set(corpus.CATEGORIES) | set(corpus.MONOIDS))
        return {"kind": "corpus", "names": names}
    try:
        obj = corpus.build(args.name)
    except KeyError as e:
        raise StructureError(str(e.args[0])) from None
    if args.emit:
        return obj
    rep = Report(f"corpus {args.name}")
    validation_checks(obj, rep)
    rep.stats["flags"] = flags(obj)
    if args.name in corpus.EXPECTED:
        rep.add("corpus.expected_flags",
                Verdict(all(rep.stats["flags"].get(k) == v for k, v in corpus.EXPECTED[args.name].items())))
    return rep


# ---------------------------------------------------------------- suite

def suite_tasks() -> list:
    """A fixed list of (check id, thunk) over the corpus and small enumerations."""
    tasks = []
    for name in sorted(corpus.COMPACT):
        def item(name=name):
            C = corpus.build(name)
            return C, is_inverse_category(C.base).ok
        tasks.append((f"corpus.{name}.validate", lambda item=item: Verdict(not validate_compact(item()[0]))))
        tasks.append((f"corpus.{name}.prop_inverse_agree", lambda item=item: Verdict(
            compact_inverse_check(item()[0]).ok == item()[1])))
        if corpus.EXPECTED[name]["inverse"]:
            tasks.append((f"corpus.{name}.endo_collapse", lambda item=item: endo_collapse_check(item()[0])))
            tasks.append((f"corpus.{name}.groupoid_agree", lambda item=item: Verdict(
                compact_groupoid_check(item()[0]).ok == is_groupoid(item()[0].base).ok)))
            tasks.append((f"corpus.{name}.roundtrip", lambda item=item: roundtrip_category(item()[0])))
            if item()[0].base.n_objects == 1:
                tasks.append((f"corpus.{name}.jarek_consistency", lambda item=item: jarek_consistency(item()[0])))
            if corpus.EXPECTED[name]["groupoid"]:
                tasks.append((f"corpus.{name}.cocycle", lambda item=item: verify_cocycle(extract(item()[0]))))
    for n in range(1, 6):
        for i, M in enumerate(enumerate_monoids(n, "inverse")):
            I = inverse_structure(M)
            tasks.append((f"enum.inverse.{n}.{i}.esn", lambda I=I: esn_roundtrip(I)))
            if M.is_commutative:
                tasks.append((f"enum.inverse.{n}.{i}.jarek", lambda I=I: jarek_roundtrip(I)))
    tasks.append(("dwp.pinj2", lambda: block_comparability_check(dewolf_pronk(corpus.pinj2()))))
    tasks += _construction_tasks() + _cocycle_tasks()
    for k, (name, D) in enumerate(desk_diagrams(objects=("1", "Z2"), groups=("1", "Z2", "Z3"), max_size=2)):
        tasks.append((f"desk.{k}.roundtrip", lambda D=D: roundtrip_diagram(D)))
    return tasks


def _projections(C: CompactStructure) -> list:
    B = C.base
    return [m for m in range(B.n_morphisms) if B.dom[m] == B.cod[m] and C.comp(m, m) == m and C.dag(m) == m]


def _construction_tasks() -> list:
    def split():
        C = corpus.build("z2zero")
        return C, split_idempotents(C, _projections(C))

    def prod():
        C, D = corpus.build("z2disc"), corpus.build("z2zero")
        return C, D, product(C, D)

    def fcat():
        G, C = corpus.build("z2").base, corpus.build("z2zero")
        return G, C, functor_category(G, C)

    def pad():
        D = decompose_compact(corpus.build("frel01"))
        return D, pad_objects(D)

    return [
        ("construct.split.compact_inverse", lambda: compact_inverse_check(split()[1])),
        ("construct.split.prediction", lambda: split_prediction(*split())),
        ("construct.split.subunits", lambda: subunit_order_check(split()[1])),
        ("construct.product.compact_inverse", lambda: compact_inverse_check(prod()[2])),
        ("construct.product.prediction", lambda: product_prediction(*prod())),
        ("construct.functorcat.compact_inverse", lambda: compact_inverse_check(fcat()[2])),
        ("construct.functorcat.prediction", lambda: functorcat_prediction(*fcat())),
        ("construct.pad.equivalence", lambda: check_padding(*pad())),
    ]


def _cocycle_tasks() -> list:
    tasks = []
    for a, b in ((2, 2), (2, 3), (3, 2), (3, 3)):
        G, H = cyclic_group(a), cyclic_group(b)
        for i, w in enumerate(normalized_cocycles(G, H)):
            d = CocycleData(G, H, trivial_action(G, H), w)
            tasks.append((f"cocycle.z{a}.z{b}.{i}.roundtrip",
                          lambda d=d: Verdict(data_equal(extract(reconstruct(d)), d))))
    Z2 = cyclic_group(2)
    t = CocycleData(Z2, Z2, trivial_action(Z2, Z2), trivial_cocycle(Z2, Z2))
    w = next(w for w in normalized_cocycles(Z2, Z2) if w != t.omega)
    d = CocycleData(Z2, Z2, t.action, w)
    tasks.append(("cocycle.z2.z2.nontrivial_class", lambda: Verdict(not cohomologous(d, t))))
    return tasks


def run_suite(jobs: int = 1, seed: int = 0) -> Report:
    """Run every suite task; scheduling order depends on the seed and the
    pool size, the report does not."""
    tasks = suite_tasks()
    order = list(range(len(tasks)))
    random.Random(seed).shuffle(order)
    results = [None] * len(tasks)

    def run(i):
        results[i] = tasks[i][1]()

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        list(pool.map(run, order))
    rep = Report("suite")
    for (id, _), v in zip(tasks, results):
        rep.add(id, v)
    rep.stats["checks"] = len(tasks)
    return rep


def cmd_suite(args):
    return run_suite(args.jobs, args.seed)


# ---------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    def global_flags(q, default):
        # accepted before or after the subcommand
        q.add_argument("--out", default=default(None), help="write the output here instead of stdout")
        q.add_argument("--format", choices=("json", "text"), default=default("json"))
        q.add_argument("--seed", type=int, default=default(0), help="scheduling order only; never changes results")
        q.add_argument("--jobs", type=int, default=default(1), help="worker threads for the suite")

    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="cptinv", description="Finite inverse and compact inverse structures.")
    global_flags(p, lambda v: v)
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **k: _add(*a, parents=[common], **k)

    s = sub.add_parser("validate", help="run the validator for the file's kind")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="classification flags")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("decompose", help="monoid or category to diagram data")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--mode", choices=("jarek", "esn", "dwp", "compact"))
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("compose", help="diagram data back to a monoid or category")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("roundtrip", help="decompose then compose and compare")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--mode", choices=("jarek", "esn", "dwp", "compact"))
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("cocycle", help="3-cocycles of compact groupoids")
    s.add_argument("action", choices=("extract", "build", "verify", "compare"))
    s.add_argument("files", nargs="*", help="input files (default: one from stdin)")
    s.add_argument("--search-symmetry", action="store_true",
                   help="with verify: search for any symmetry on the reconstruction")
    s.set_defaults(func=cmd_cocycle)

    s = sub.add_parser("construct", help="split idempotents, products, functor categories, padding")
    s.add_argument("kind", choices=("split", "product", "functorcat", "pad"))
    s.add_argument("files", nargs="*", help="input files (default: one from stdin)")
    s.add_argument("--idempotents", help="comma-separated morphism indices to split (default: all projections)")
    s.add_argument("--check", action="store_true", help="report the construction's checks instead of emitting it")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", help="monoids of a given order up to isomorphism")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=CLASSES, default=None,
                   help="default: monoid, or commutative-inverse with --via-jarek")
    s.add_argument("--via-jarek", action="store_true", help="glue semilattices of abelian groups instead")
    s.add_argument("--bound", type=int, default=6)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("corpus", help="named example structures")
    s.add_argument("name", nargs="?")
    s.add_argument("--emit", action="store_true", help="print the structure as JSON")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("suite", help="the fixed regression suite")
    s.set_defaults(func=cmd_suite)
    return p


def _text(result) -> str:
    if isinstance(result, Report):
        return result.to_text()
    if isinstance(result, dict):
        if result.get("kind") == "enumeration":
            return "\n".join([f"COUNT {result['count']}"] + [
                json.dumps(M["table"], separators=(",", ":")) for M in result["items"]])
        if result.get("kind") == "corpus":
            return "\n".join(result["names"])
    d = result if isinstance(result, dict) else serialize.to_dict(result)
    return json.dumps(d, ensure_ascii=False, indent=1)


def render(result, fmt: str) -> str:
    if fmt == "text":
        return _text(result)
    if isinstance(result, Report):
        return result.to_json()
    return serialize.dumps(result)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except StructureError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Refused as e:
        msg = f"refused: {e}"
        if e.witness is not None:
            msg += f" (witness {e.witness!r})"
        print(msg, file=sys.stderr)
        return EXIT_REFUSED
    text = render(result, args.format) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if isinstance(result, Report) and not result.ok:
        return EXIT_FAIL
    return EXIT_OK
