import io
import json

import pytest

from cocyclelab.cli import run


def call(argv, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_weyl_g2():
    code, out, _ = call(["weyl", "--type", "G2"])
    d = json.loads(out)
    assert code == 0 and d["minus_one"] is True and d["word_length"] == 6
    assert d["action"] == [["-1/1", "0/1"], ["0/1", "-1/1"]]


def test_weyl_text():
    code, out, _ = call(["weyl", "--type", "a2", "--format", "text"])
    assert code == 0 and "minus_one   false" in out and "s=1 t=1" in out


def parse_tsv(out):
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    header = lines[0].split("\t")
    return [dict(zip(header, map(int, ln.split("\t")))) for ln in lines[1:]]


def test_table_hyperbolic_product():
    code, out, _ = call(["table", "--factors", "A1,A1", "--max-degree", "6"])
    rows = parse_tsv(out)
    assert code == 0 and len(rows) == 7
    assert [r["NH"] for r in rows] == [0, 0, 0, 1, 1, 0, 0]
    assert rows[3]["NH_alt"] == 1 and rows[3]["NH_nalt"] == 0
    assert rows[4]["NH_nalt"] == 1 and rows[4]["NH_alt"] == 0


def test_table_json_with_hg_and_pages():
    code, out, _ = call(["table", "--factors", "A2", "--max-degree", "4", "--hg", "1,0,0,0,0",
                         "--format", "json"])
    d = json.loads(out)
    assert code == 0 and (d["s"], d["t"]) == (1, 1)
    assert d["even_degree_alt_isomorphism"] is False
    assert d["rows"][2]["H_alt"] == 1
    assert {pg["label"] for pg in d["pages"]} == {"nalt_E1", "nalt_E2", "alt_E1", "alt_E2"}


def test_pages_outputs():
    code, out, _ = call(["pages", "--factors", "A1,A1", "--format", "json"])
    d = json.loads(out)
    nalt = next(pg for pg in d["pages"] if pg["label"] == "nalt_E1")
    assert code == 0 and nalt["rows"][2][2] == 1
    code, out, _ = call(["pages", "--factors", "B2", "--max-p", "2", "--max-q", "3"])
    assert code == 0 and "alt_E2" in out


def test_verify_forced_failure_exit_code():
    code, out, _ = call(["verify", "--check", "cocycle_c3", "--dims", "3,4", "--trials", "100",
                         "--tol", "1e-300", "--seed", "1"])
    assert code == 1 and out.startswith("FAIL")


def test_verify_json_and_env_seed(monkeypatch):
    monkeypatch.setenv("COCYCLELAB_SEED", "17")
    code, out, _ = call(["verify", "--check", "reversal_c4", "--trials", "20", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["seed"] == 17 and d["pass"] is True
    monkeypatch.setenv("COCYCLELAB_SEED", "x")
    code, _, err = call(["verify", "--check", "reversal_c4", "--trials", "5"])
    assert code == 2 and "COCYCLELAB_SEED" in err


@pytest.mark.parametrize("argv", [
    ["weyl", "--type", "G2", "--format", "json"],
    ["table", "--factors", "E6", "--format", "json"],
    ["pages", "--factors", "A3", "--format", "json"],
    ["verify", "--check", "invariance_c3", "--trials", "30", "--seed", "3", "--format", "json"],
])
def test_json_is_byte_identical_across_runs(argv):
    first = call(argv)[1]
    assert first == call(argv)[1]
    json.loads(first)


@pytest.mark.parametrize("argv,flag", [
    (["weyl"], "--type"),
    (["weyl", "--type", "G2", "--bogus"], "--bogus"),
    (["table", "--factors", "Q7"], "Q7"),
    (["table", "--factors", "A2", "--max-degree", "-1"], "--max-degree"),
    (["verify", "--check", "nope"], "--check"),
    (["verify", "--check", "cocycle_c3", "--dims", "1,4"], "--dims"),
    (["verify", "--check", "cocycle_c3", "--tol", "0"], "--tol"),
    (["frobnicate"], "frobnicate"),
    ([], "command"),
])
def test_usage_errors(argv, flag):
    code, out, err = call(argv)
    assert code == 2 and out == "" and flag in err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
