import json

import pytest

from mzv import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dual_text(capsys):
    code, out, err = run(["dual", "(4,1,1)"], capsys)
    assert code == 0
    assert out == "(1,1,1,3)\n"


def test_dual_json_is_byte_stable(capsys):
    code, out, _ = run(["dual", "(4,1,1)", "--output", "json"], capsys)
    assert code == 0
    assert out == '{"command":"dual","input":"(4,1,1)","result":"(1,1,1,3)"}\n'
    code2, out2, _ = run(["dual", "(4,1,1)", "--output", "json"], capsys)
    assert out2 == out


def test_apply_refine(capsys):
    code, out, _ = run(["apply", "u", "(2)"], capsys)
    assert code == 0
    assert out == "(1,1) + (2)\n"


def test_apply_reverse_of_empty(capsys):
    code, out, _ = run(["apply", "tau", "phi"], capsys)
    assert code == 0
    assert out == "phi\n"


def test_apply_signed_json_terms(capsys):
    code, out, _ = run(["apply", "sigma", "(1,1) + (2)", "--output", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "apply"
    assert payload["result"] == "(1,1) - (2)"
    assert payload["terms"] == [
        {"index": [1, 1], "num": 1, "den": 1},
        {"index": [2], "num": -1, "den": 1},
    ]


def test_product_five_terms(capsys):
    code, out, _ = run(["product", "*", "(1)", "(2,3)"], capsys)
    assert code == 0
    assert out == "(1,2,3) + (2,1,3) + (2,3,1) + (2,4) + (3,3)\n"


def test_product_signed_five_terms(capsys):
    code, out, _ = run(["product", "starbar", "(1)", "(2,3)"], capsys)
    assert code == 0
    assert out == "(1,2,3) + (2,1,3) + (2,3,1) - (2,4) - (3,3)\n"


def test_product_with_empty_factor(capsys):
    code, out, _ = run(["product", "*", "phi", "(2)"], capsys)
    assert code == 0
    assert out == "(2)\n"


def test_product_fuses_last_parts(capsys):
    code, out, _ = run(["product", "circ", "(2)", "(2)"], capsys)
    assert code == 0
    assert out == "(4)\n"


def test_rank_table_small(capsys):
    code, out, _ = run(
        ["rank-table", "--k-min", "2", "--k-max", "4", "--output", "json"], capsys
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [(r["k"], r["zagier"], r["formula"], r["rank"], r["ohno_rank"]) for r in rows] == [
        (2, 1, 1, 1, 1),
        (3, 3, 2, 2, 2),
        (4, 6, 5, 5, 5),
    ]
    assert all(r["mode"] == "exact" for r in rows)


def test_rank_table_modular_mode(capsys):
    code, out, _ = run(
        ["rank-table", "--k-min", "5", "--k-max", "5", "--exact-up-to", "4",
         "--output", "json"],
        capsys,
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0]["mode"] == "modular-lower-bound"
    assert rows[0]["rank"] == 10


def test_rank_table_text_header(capsys):
    code, out, _ = run(["rank-table", "--k-max", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "d_Z", "formula", "rank", "ohno-rank", "mode"]
    assert len(lines) == 3


def test_rank_table_bad_range(capsys):
    code, _, err = run(["rank-table", "--k-min", "5", "--k-max", "3"], capsys)
    assert code == 2
    assert "k-min" in err


def test_verify_identities(capsys):
    code, out, _ = run(["verify", "identities", "--weight", "4"], capsys)
    assert code == 0
    assert out.strip().endswith("all passed")
    assert "FAIL" not in out


def test_verify_theorem310(capsys):
    code, out, _ = run(
        ["verify", "theorem310", "--weight", "3", "--grid", "3", "--output", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert all(c["pass"] for c in payload["checks"])


def test_verify_duality(capsys):
    code, out, _ = run(["verify", "duality", "--weight", "5"], capsys)
    assert code == 0
    assert "all passed" in out


def test_verify_ohno(capsys):
    code, out, _ = run(["verify", "ohno", "--weight", "4"], capsys)
    assert code == 0
    assert "all passed" in out


def test_verify_numeric_small_truncation(capsys):
    code, out, _ = run(
        ["verify", "numeric", "--pairs-up-to", "3", "--truncation", "10000",
         "--output", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    names = [c["name"] for c in payload["checks"]]
    assert "kawashima((1),(1))" in names
    assert "euler:(3)=(1,2)" in names
    assert any(n.startswith("quadratic(") for n in names)
    assert payload["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(
        cli.SUITES, "identities", lambda args: [{"name": "forced", "pass": False}]
    )
    code, out, _ = run(["verify", "identities"], capsys)
    assert code == 1
    assert "FAIL" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(["dual", "(1,2"], capsys)
    assert code == 2
    assert "mzv:" in err


def test_unknown_operator_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["apply", "nosuch", "(2)"])
    assert exc.value.code == 2


def test_thread_validation(capsys):
    code, _, err = run(["dual", "(2)", "--threads", "0"], capsys)
    assert code == 2
    assert "threads" in err


def test_truncation_validation(capsys):
    code, _, err = run(
        ["verify", "numeric", "--truncation", "999"], capsys
    )
    assert code == 2
    assert "truncation" in err


def test_weight_cap(capsys):
    code, _, err = run(["verify", "duality", "--weight", "25"], capsys)
    assert code == 2
    assert "cap" in err


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("MZV_THREADS", "3")
    args = cli.build_parser().parse_args(["dual", "(2)"])
    assert args.threads == 3


def test_truncation_env_fallback(monkeypatch):
    monkeypatch.setenv("MZV_TRUNCATION", "54321")
    args = cli.build_parser().parse_args(["verify", "numeric"])
    assert args.truncation == 54321


def test_bad_env_value(monkeypatch, capsys):
    monkeypatch.setenv("MZV_THREADS", "many")
    with pytest.raises(SystemExit) as exc:
        cli.build_parser()
    assert exc.value.code == 2
