import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cptinv import corpus
from cptinv.cli import main, run_suite
from cptinv.cocycle import CocycleData, normalized_cocycles, trivial_action
from cptinv.finalg import cyclic_group
from cptinv.serialize import dumps, loads

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys, monkeypatch, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def emit(name):
    return dumps(corpus.build(name))


def test_golden_jarek_pipeline(capsys, monkeypatch):
    code, out, _ = run(["decompose", "--mode", "jarek"], capsys, monkeypatch, stdin=emit("z2zero"))
    assert code == 0
    assert out == (GOLDEN / "z2zero_jarek.json").read_text()


def test_corpus_listing_and_emit(capsys, monkeypatch):
    code, out, _ = run(["corpus"], capsys, monkeypatch)
    assert code == 0 and "pinj2" in json.loads(out)["names"]
    code, out, _ = run(["corpus", "z2zero", "--emit"], capsys, monkeypatch)
    assert code == 0 and loads(out).base.n_morphisms == 3


def test_exit_codes(capsys, monkeypatch, tmp_path):
    assert run(["validate"], capsys, monkeypatch, stdin="{not json")[0] == 2
    assert run(["corpus", "nope"], capsys, monkeypatch)[0] == 2
    assert run(["validate", str(tmp_path / "missing.json")], capsys, monkeypatch)[0] == 2
    code, _, err = run(["decompose", "--mode", "compact"], capsys, monkeypatch, stdin=emit("z4mult"))
    assert code == 3 and "refused" in err
    assert run(["enumerate", "--order", "7"], capsys, monkeypatch)[0] == 3
    # a failing check exits 1: the two cocycle classes over Z/2 differ
    Z2 = cyclic_group(2)
    paths = []
    for i, w in enumerate(normalized_cocycles(Z2, Z2)):
        paths.append(tmp_path / f"w{i}.json")
        paths[-1].write_text(dumps(CocycleData(Z2, Z2, trivial_action(Z2, Z2), w)))
    code, out, _ = run(["cocycle", "compare", *map(str, paths), "--format", "text"], capsys, monkeypatch)
    assert code == 1 and "CHECK cocycle.cohomologous FAIL" in out


def test_validate_reports_failure(capsys, monkeypatch):
    bad = {"kind": "monoid", "elements": ["e", "x"], "unit": 0, "table": [[0, 0], [1, 1]]}
    code, out, _ = run(["validate", "--format", "text"], capsys, monkeypatch, stdin=json.dumps(bad))
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("name", sorted(corpus.compact_inverse_items()))
def test_roundtrip_compact(name, capsys, monkeypatch):
    code, out, _ = run(["roundtrip", "--mode", "compact"], capsys, monkeypatch, stdin=emit(name))
    assert code == 0 and json.loads(out)["ok"]


def test_decompose_compose_pipeline(capsys, monkeypatch):
    code, out, _ = run(["decompose", "--mode", "compact"], capsys, monkeypatch, stdin=emit("z2zero"))
    assert code == 0 and json.loads(out)["kind"] == "sdiagram"
    code, out, _ = run(["compose"], capsys, monkeypatch, stdin=out)
    assert code == 0 and json.loads(out)["kind"] == "dagcat"


def test_esn_and_dwp_modes(capsys, monkeypatch):
    code, out, _ = run(["decompose", "--mode", "esn"], capsys, monkeypatch, stdin=emit("i2"))
    assert code == 0 and json.loads(out)["kind"] == "ordgpd"
    code, out, _ = run(["decompose", "--mode", "dwp"], capsys, monkeypatch, stdin=emit("pinj2"))
    assert code == 0 and len(json.loads(out)["blocks"]) == 3


def test_cocycle_commands(capsys, monkeypatch, tmp_path):
    code, out, _ = run(["cocycle", "extract"], capsys, monkeypatch, stdin=emit("z2disc"))
    assert code == 0
    path = tmp_path / "c.json"
    path.write_text(out)
    code, out, _ = run(["cocycle", "verify", str(path), "--format", "text"], capsys, monkeypatch)
    assert code == 0 and "CHECK cocycle.identity PASS" in out
    code, out, _ = run(["cocycle", "compare", str(path), str(path)], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["cocycle", "build", str(path)], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["kind"] == "dagcat"


@pytest.mark.parametrize("kind,names", [("split", ["z2zero"]), ("product", ["z2disc", "z2zero"]),
                                        ("functorcat", ["z2", "z2zero"]), ("pad", ["frel01"])])
def test_construct_check(kind, names, capsys, monkeypatch, tmp_path):
    paths = []
    for n in names:
        p = tmp_path / f"{n}.json"
        p.write_text(emit(n))
        paths.append(str(p))
    code, out, _ = run(["construct", kind, *paths, "--check"], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["ok"]


def test_enumerate(capsys, monkeypatch):
    code, out, _ = run(["enumerate", "--order", "4", "--class", "inverse"], capsys, monkeypatch)
    assert code == 0 and len(json.loads(out)["items"]) == 11
    code, out, _ = run(["enumerate", "--order", "4", "--via-jarek"], capsys, monkeypatch)
    assert code == 0 and len(json.loads(out)["items"]) == 11


def test_flags_after_subcommand_and_out_file(capsys, monkeypatch, tmp_path):
    target = tmp_path / "r.txt"
    code, out, _ = run(["corpus", "z2", "--format", "text", "--out", str(target)], capsys, monkeypatch)
    assert code == 0 and out == ""
    assert target.read_text().startswith("CHECK ")


def test_suite_is_deterministic_across_jobs():
    a, b = run_suite(jobs=1, seed=0), run_suite(jobs=3, seed=5)
    assert a.ok and a.to_json() == b.to_json()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cptinv", "corpus"], capture_output=True, text=True)
    assert proc.returncode == 0 and "z2zero" in proc.stdout
