import json
from fractions import Fraction

import pytest

from permcsp import moments
from permcsp.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT,
    EXIT_LIMIT,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    SCHEMA,
    run_capture,
)
from permcsp.instancefile import parse

BTW_ONE = "pi 123,321\nk 1\ncon u v w\n"
ORDER_ONE = "pi 123\ncon u v w\n"


def run_json(argv, stdin=None):
    code, out, err = run_capture([*argv, "--json"], stdin)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_decide_single_constraint():
    rep = run_json(["decide"], BTW_ONE)
    assert rep["schema"] == SCHEMA and rep["command"] == "decide"
    # one satisfied betweenness triple beats the average 1/3 by only 2/3
    assert rep["result"]["verdict"] == "NO"
    assert rep["result"]["max_deviation"] == "2/3"
    assert run_json(["decide", "--k", "0"], BTW_ONE)["result"]["verdict"] == "YES"


def test_no_answer_exits_zero():
    code, out, _ = run_capture(["decide", "--k", "1"], ORDER_ONE)
    assert code == EXIT_OK
    assert "result.verdict: NO" in out


def test_brute_and_dp_agree():
    text = "pi 123,231\nk 1\ncon a b c\ncon b d a\ncon d c a x2\n"
    a = run_json(["solve", "--method", "dp"], text)["result"]
    b = run_json(["solve", "--method", "brute"], text)["result"]
    assert a == b


def test_hard_family_pipes_into_solve():
    code, text, _ = run_capture(["gen-hard", "--level", "1"])
    assert code == EXIT_OK and text.startswith("# gen-hard\n")
    rep = run_json(["solve"], text)
    assert rep["result"]["max_deviation"] == "0/1"
    assert rep["stats"]["n"] == 6 and rep["stats"]["m"] == 24


def test_transform_output_parses():
    code, text, err = run_capture(["transform", "--to", "9"], BTW_ONE)
    assert code == EXIT_OK, err
    assert parse(text).pi.mask != 0


def test_output_file(tmp_path):
    dest = tmp_path / "k.txt"
    code, out, _ = run_capture(["decompose", "-o", str(dest)], BTW_ONE)
    assert code == EXIT_OK and "result.r:" in out
    back = parse(dest)
    assert (back.r, back.s, back.k) == (4, 2, 2)


def test_input_file(tmp_path):
    src = tmp_path / "in.txt"
    src.write_text(BTW_ONE, encoding="utf-8")
    assert run_json(["decide", "-i", str(src), "--k", "0"])["result"]["verdict"] == "YES"


@pytest.mark.parametrize("argv,stdin,code", [
    (["solve"], "con a a b\n", EXIT_INPUT),
    (["solve"], "bogus\n", EXIT_INPUT),
    (["solve", "-i", "/nonexistent/file"], None, EXIT_INPUT),
    (["solve", "--max-dp-n", "3"], "con a b c\ncon b c d\n", EXIT_LIMIT),
    (["decide", "--method", "brute", "--max-brute-n", "3"], "con a b c\ncon b c d\n",
     EXIT_LIMIT),
    (["solve", "--max-dp-n", "2"], "con a b c\n", EXIT_UNSUPPORTED),
    (["kernelize"], "arc a b\n", EXIT_UNSUPPORTED),
    (["transform", "--to", "11"], BTW_ONE, EXIT_UNSUPPORTED),
])
def test_exit_codes(argv, stdin, code):
    got, _, err = run_capture(argv, stdin)
    assert got == code
    assert err.startswith("permcsp: error:")


def test_usage_error_exits_two():
    assert run_capture(["solve", "--k", "-3"], BTW_ONE)[0] == 2


def test_json_is_deterministic_up_to_wall_time():
    a = run_json(["moments"], ORDER_ONE)
    b = run_json(["moments"], ORDER_ONE)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
    assert Fraction(a["result"]["mixed"]["E[Z^2]"]) == Fraction(1, 12)
    assert Fraction(run_json(["moments"], BTW_ONE)["result"]["E[Z^2]"]) == Fraction(11, 96)


def test_classify():
    rep = run_json(["classify", "--pi", "123,321"])
    assert rep["result"]["class"] == 5
    assert rep["result"]["name"] == "Betweenness"
    assert rep["result"]["orbit_size"] == 3
    by_number = run_json(["classify", "--pi", "5"])["result"]
    assert by_number["pi"] == rep["result"]["representative"]


def test_gen_rand_is_seeded():
    argv = ["gen-rand", "--n", "5", "--m", "7", "--pi", "123,321", "--seed", "42"]
    assert run_capture(argv) == run_capture(argv)


def test_selfcheck_reports_every_criterion():
    code, out, _ = run_capture(["selfcheck", "--json"])
    rep = json.loads(out)
    numbers = [row["criterion"] for row in rep["result"]["criteria"]]
    assert numbers == list(range(1, 13))
    assert code == (EXIT_OK if not rep["result"]["failed"] else EXIT_CHECK_FAILED)


def test_selfcheck_catches_a_corrupted_table(monkeypatch):
    table = dict(moments.TRIPLE_TABLE)
    key = next(k for k, v in table.items() if v[3] != 0)
    xa, xb, y, z = table[key]
    table[key] = (xa, xb, y, -z)
    monkeypatch.setattr(moments, "TRIPLE_TABLE", table)
    code, out, _ = run_capture(["selfcheck", "--json"])
    assert code == EXIT_CHECK_FAILED
    assert 9 in json.loads(out)["result"]["failed"]
