import json
import subprocess
import sys

import pytest

from skewarm.atlas import ATLAS_PATH_ENV, validate
from skewarm.cli import EXIT_BUDGET, EXIT_ERROR, EXIT_FAILS, EXIT_HOLDS, main, parse_signature


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ex1_central_holds(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "EX1-swap", "--property", "central-skew-armendariz",
                       "--degree", "1")
    assert code == EXIT_HOLDS
    assert "holds-up-to-bound" in out


def test_check_ex5_fails_with_documented_pair(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "EX5-T2F3", "--property", "central-skew-armendariz",
                       "--degree", "1")
    assert code == EXIT_FAILS
    assert "documented pair (confirmed)" in out
    assert "[[0,2],[0,0]]" in out  # the product (0 -1; 0 0) over Z3


def test_check_ex1_skew_fails(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "EX1-swap", "--property", "skew-armendariz", "--degree", "1")
    assert code == EXIT_FAILS


def test_check_budget_exit(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "U3Z2", "--property", "central-skew-armendariz",
                       "--degree", "2", "--budget", "100")
    assert code == EXIT_BUDGET
    assert "holds-up-to-budget" in out


def test_check_writes_valid_report(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, "check", "--fixture", "EX2-z4mat", "--property", "skew-armendariz",
                     "--degree", "1", "--out", str(out_file))
    assert code == EXIT_FAILS
    doc = json.loads(out_file.read_text())
    validate(doc, "report")
    assert doc["verdict"] == "fails"


def test_check_element_property(capsys):
    code, out, _ = run(capsys, "check", "--fixture", "EX3-diag-swap", "--property", "fixes-idempotents")
    assert code == EXIT_FAILS


def test_check_from_atlas(capsys, tmp_path):
    atlas = tmp_path / "fx.json"
    assert run(capsys, "atlas", "export", str(atlas))[0] == EXIT_HOLDS
    code, out, _ = run(capsys, "check", "--atlas", str(atlas), "--ring", "Z2xZ2", "--map", "EX1-swap",
                       "--property", "skew-armendariz", "--degree", "1")
    assert code == EXIT_FAILS
    code, _, err = run(capsys, "check", "--atlas", str(atlas), "--ring", "nope", "--property", "reduced")
    assert code == EXIT_ERROR and "not in atlas" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "check", "--property", "reduced")
    assert code == EXIT_ERROR
    with pytest.raises(SystemExit):
        main(["check", "--fixture", "EX1-swap", "--property", "bogus"])


# --- signatures and search --------------------------------------------------------

def test_parse_signature_forms():
    a = parse_signature("central-skew-armendariz=holds ∧ skew-armendariz=fails ∧ twist≠id")
    b = parse_signature("central-skew-armendariz=holds & skew-armendariz=fails & twist!=id")
    c = parse_signature("central-skew-armendariz=holds and skew-armendariz=fails, twist!=id")
    assert a == b == c == [("central-skew-armendariz", True, "holds"), ("skew-armendariz", True, "fails"),
                           ("twist", False, "id")]
    for bad in ("", "reduced", "reduced=maybe", "nope=holds", "twist=swap"):
        with pytest.raises(ValueError):
            parse_signature(bad)


def test_search_finds_ex1(capsys):
    code, out, _ = run(capsys, "search", "--signature",
                       "central-skew-armendariz=holds & skew-armendariz=fails & twist!=id", "--degree", "1")
    assert code == EXIT_HOLDS
    hits = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    assert "EX1-swap" in [h["entry"] for h in hits]
    ex1 = next(h for h in hits if h["entry"] == "EX1-swap")
    assert "skew-armendariz" in ex1["witnesses"]


def test_search_unsatisfiable_is_empty(capsys):
    code, out, _ = run(capsys, "search", "--signature", "commutative=holds & commutative=fails")
    assert code == EXIT_HOLDS
    assert out.strip().splitlines()[-1].startswith("# 0 match(es)")


def test_search_limits_report_partial(capsys):
    code, out, _ = run(capsys, "search", "--signature", "commutative=holds", "--max-entries", "3")
    assert "partial: entry limit reached" in out
    code, out, _ = run(capsys, "search", "--signature", "commutative=holds", "--limit", "1")
    assert "partial: match limit reached" in out


def test_search_abelian_not_central_runs(capsys):
    # the outcome is whatever the corpus holds; the run must finish cleanly and summarise
    code, out, _ = run(capsys, "search", "--signature", "abelian=holds & central-armendariz=fails",
                       "--degree", "1")
    assert code == EXIT_HOLDS
    assert out.strip().splitlines()[-1].startswith("# ")
    for line in out.splitlines():
        if line.startswith("{"):
            assert json.loads(line)["witnesses"]


def test_search_with_endomorphisms_and_atlas_path(capsys, tmp_path, monkeypatch):
    atlas = tmp_path / "extra.json"
    atlas.write_text(json.dumps({"version": 1, "rings": [{
        "name": "Z2sq", "order": 4, "zero": 0, "one": 3,
        "add": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
        "mul": [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]}], "maps": []}))
    monkeypatch.setenv(ATLAS_PATH_ENV, str(tmp_path))
    code, out, _ = run(capsys, "search", "--signature", "skew-armendariz=fails & twist!=id", "--degree", "1",
                       "--endomorphisms")
    entries = [json.loads(line)["entry"] for line in out.splitlines() if line.startswith("{")]
    # the imported ring is Z2 x Z2 in another labelling: swap and the two collapsing maps match
    assert [e for e in entries if e.startswith("Z2sq:")] == ["Z2sq:endo0", "Z2sq:endo2", "Z2sq:endo3"]


# --- atlas and reproduce ---------------------------------------------------------

def test_atlas_list_shows_fixtures(capsys, tmp_path):
    path = tmp_path / "fx.json"
    run(capsys, "atlas", "export", str(path))
    code, out, _ = run(capsys, "atlas", "list", str(path))
    assert code == EXIT_HOLDS
    rows = out.strip().splitlines()[1:]
    assert len(rows) >= 9
    assert any(r.startswith("EX1-swap") and r.split()[-1] == "2" for r in rows)


def test_atlas_import_rejects_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    mul[2][3] = mul[3][2] = 0
    path.write_text(json.dumps({"version": 1, "maps": [], "rings": [
        {"name": "broken", "order": 4, "zero": 0, "one": 1,
         "add": [[(a + b) % 4 for b in range(4)] for a in range(4)], "mul": mul}]}))
    code, _, err = run(capsys, "atlas", "import", str(path))
    assert code == EXIT_ERROR
    assert "witness (" in err


def test_atlas_import_resaves_identically(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "atlas", "export", str(a))
    code, out, _ = run(capsys, "atlas", "import", str(a), "--out", str(b))
    assert code == EXIT_HOLDS and out.startswith("ok:")
    assert a.read_bytes() == b.read_bytes()


def test_reproduce_without_harness(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce-paper", "--no-harness", "--out", str(tmp_path))
    assert code == EXIT_HOLDS
    line = next(l for l in out.splitlines() if l.startswith("EX2-z4mat") and "skew-armendariz" in l)
    assert "fails" in line and " ok " in line
    assert (tmp_path / "reproduce.txt").exists()
    doc = json.loads((tmp_path / "reproduce.json").read_text())
    assert all(r["ok"] for r in doc["rows"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewarm", "check", "--fixture", "Z4", "--property", "reduced"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_FAILS
    assert "reduced" in proc.stdout
