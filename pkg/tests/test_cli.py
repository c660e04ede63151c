import json

import pytest

from jtalg.cli import run
from jtalg.jomega import TABLE_BLOCK


@pytest.fixture
def cli(capsys):
    def invoke(*argv):
        code = run(list(argv))
        out = capsys.readouterr()
        return code, out.out
    return invoke


def test_decide_exit_codes(cli):
    assert cli("decide", "l((x*y)) = x") == (0, "Entailed\n")
    code, out = cli("decide", "l(x) = x")
    assert code == 1 and out == "Collapsing\n"
    code, _ = cli("decide", "l(x")
    assert code == 2


def test_decide_text_and_json_agree(cli):
    _, text = cli("decide", "(x*y) = (y*x)")
    code, raw = cli("decide", "(x*y) = (y*x)", "--format", "json")
    payload = json.loads(raw)
    assert code == 1
    assert payload["verdict"] == "collapsing"
    assert text.strip().lower() == payload["verdict"]


def test_jw_commands(cli):
    assert cli("jw", "mul", "3", "4") == (0, "32\n")
    assert cli("jw", "unpair", "23") == (0, "4 2\n")
    assert cli("jw", "descent", "13") == (0, "13 1 0\n")
    code, out = cli("jw", "table", "--rows", "5", "--cols", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["table"] == [list(r) for r in TABLE_BLOCK]
    code, out = cli("jw", "verify", "--bound", "500", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_jw1_commands(cli):
    assert cli("jw1", "mul", "w", "w") == (0, "w+1\n")
    assert cli("jw1", "left", "w+6") == (0, "w+1\n")
    assert cli("jw1", "right", "w+4") == (0, "w+6\n")
    assert cli("jw1", "descent", "w+8") == (0, "w+8 w+2 w\n")
    code, _ = cli("jw1", "left", "w*9+1", "--stages", "2")
    assert code == 2
    code, _ = cli("jw1", "left", "not-an-ordinal")
    assert code == 2


def test_jw1_verify(cli):
    code, out = cli("jw1", "verify", "--stages", "2", "--window", "16",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert {s["name"] for s in payload["sections"]} >= {
        "axioms", "placement", "descent", "coverage",
        "products_confined", "restriction"}


def test_jw1_dump_csv_matches_mul(cli):
    code, out = cli("jw1", "dump", "--stages", "2", "--window", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "row,col,value"
    assert len(lines) == 1 + 8 * 8
    assert "w,w,w+1" in lines
    code, out = cli("jw1", "dump", "--stages", "2", "--window", "4",
                    "--format", "json")
    cells = json.loads(out)["cells"]
    assert {"row": "w", "col": "w", "value": "w+1"} in cells


def test_eval(cli):
    assert cli("eval", "(x*y)", "--env", '{"x": 3, "y": 4}') == (0, "32\n")
    assert cli("eval", "l(x)", "--algebra", "jw1", "--env", '{"x": "w+6"}') == (0, "w+1\n")
    code, _ = cli("eval", "(x*y)", "--env", '{"x": 3}')
    assert code == 2
    code, _ = cli("eval", "x", "--env", '{"x": "w+1"}')  # ordinal in the base algebra
    assert code == 2


def test_normalize(cli):
    assert cli("normalize", "r(l(((x*(y*z))*w)))") == (0, "(y*z)\n")
    code, out = cli("normalize", "l((x*y))", "--proof", "--format", "json")
    payload = json.loads(out)
    assert payload["normal_form"] == "x"
    assert payload["proof"]["steps"][0]["rule"] == "eps_l"


def test_proof_roundtrip_through_files(cli, tmp_path):
    code, out = cli("decide", "(x*y) = (y*x)", "--proof", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    proof_file = tmp_path / "collapse.json"
    proof_file.write_text(json.dumps(payload))
    assert cli("check-proof", str(proof_file))[0] == 0

    code, out = cli("decide", "l(((x*y)*z)) = (x*y)", "--proof", "--format", "json")
    assert code == 0
    proof_file2 = tmp_path / "entailed.json"
    proof_file2.write_text(json.dumps(json.loads(out)))
    assert cli("check-proof", str(proof_file2))[0] == 0


def test_check_proof_detects_tampering(cli, tmp_path):
    _, out = cli("decide", "(x*y) = (y*x)", "--proof", "--format", "json")
    payload = json.loads(out)
    payload["proof"]["steps"][0]["pos"] = ["left"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(payload))
    code, out = cli("check-proof", str(bad), "--format", "json")
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_check_proof_needs_hypothesis(cli, tmp_path):
    _, out = cli("decide", "l(x) = x", "--proof", "--format", "json")
    payload = json.loads(out)
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(payload["proof"]))
    assert cli("check-proof", str(bare))[0] == 1
    assert cli("check-proof", str(bare), "--hypothesis", "l(x) = x")[0] == 0


def test_corpus_is_seeded(cli):
    _, a = cli("corpus", "--count", "5", "--seed", "9")
    _, b = cli("corpus", "--count", "5", "--seed", "9")
    _, c = cli("corpus", "--count", "5", "--seed", "10")
    assert a == b != c


def test_closure_command(cli):
    code, out = cli("closure", "0", "--ceiling", "100", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(range(45)) <= set(payload["elements"])
    code, out = cli("closure", "w+3", "--algebra", "jw1", "--unary-only",
                    "--budget", "8", "--format", "json")
    assert code == 0
    assert "w" in json.loads(out)["elements"]


def test_usage_errors(cli):
    assert cli("jw", "mul", "3")[0] == 2
    assert cli("nonsense")[0] == 2
    assert cli()[0] == 2
