"""
End-to-end tests for the mackit command line: exit codes, stdout payloads
and the environment override.
"""

import json

import pytest

from src.config import MAX_DEGREE_ENV, get_default_config
from src.main import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jpoly_json(capsys):
    code, out, _ = run(capsys, "jpoly", "--partition", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "m"
    assert data["nvars"] == 1
    assert data["coeffs"] == [{"partition": [1], "num": "1 - t", "den": "1"}]


@pytest.mark.parametrize("via", ["b1", "b2", "b3", "oracle"])
def test_jpoly_methods_agree(capsys, via):
    code, out, _ = run(capsys, "jpoly", "--partition", "2,1", "--nvars", "3", "--via", via, "--format", "json")
    assert code == 0
    coeffs = {tuple(c["partition"]): (c["num"], c["den"]) for c in json.loads(out)["coeffs"]}
    assert set(coeffs) == {(2, 1), (1, 1, 1)}
    assert all(den == "1" for _, den in coeffs.values())


def test_jpoly_monic_text(capsys):
    code, out, _ = run(capsys, "jpoly", "--partition", "1,1", "--monic")
    assert code == 0
    assert out.splitlines() == ["m[1,1]  1"]


def test_jpoly_too_many_parts(capsys):
    code, _, err = run(capsys, "jpoly", "--partition", "1,1,1", "--nvars", "2")
    assert code == 2
    assert "usage error" in err


def test_bad_partition(capsys):
    code, _, _ = run(capsys, "jpoly", "--partition", "1,2")
    assert code == 2


def test_missing_required_argument():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["jpoly"])
    assert exc.value.code == 2


def test_verify_unknown_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert out == ""
    assert "unknown suite" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hecke", "--nvars", "2", "--max-degree", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["nvars"] == 2


def test_kostka_guard(capsys):
    code, _, err = run(capsys, "kostka", "--degree", "7")
    assert code == 2
    assert "--allow-large" in err


def test_kostka_text(capsys):
    code, out, _ = run(capsys, "kostka", "--degree", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split() == ["(2)", "1", "q"]
    assert lines[2].split() == ["(1,1)", "t", "1"]


def test_pieri_json(capsys):
    code, out, _ = run(capsys, "pieri", "--partition", "1", "--k", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["nvars"] == 2
    assert [t["partition"] for t in data["pieri"]["terms"]] == [[2], [1, 1]]
    assert "explore" not in data


def test_pieri_explore(capsys):
    code, out, _ = run(capsys, "pieri", "--partition", "1", "--k", "1", "--explore", "--format", "json")
    assert code == 0
    explore = json.loads(out)["explore"]
    assert explore["operator"] == "B3_1"
    assert explore["exploratory"] is False
    assert explore["image"]["coeffs"] == [{"partition": [2], "num": "1", "den": "1"}]


def test_pieri_k_out_of_range(capsys):
    code, _, _ = run(capsys, "pieri", "--partition", "1", "--k", "3", "--nvars", "2")
    assert code == 2


def test_threads_must_be_positive(capsys):
    code, _, _ = run(capsys, "kostka", "--degree", "1", "--threads", "-1")
    assert code == 2


def test_zero_threads_is_rejected(capsys):
    code, out, err = run(capsys, "kostka", "--degree", "1", "--threads", "0")
    assert code == 2
    assert out == ""
    assert "--threads must be at least 1, got 0" in err


def test_max_degree_override():
    assert get_default_config(environ={MAX_DEGREE_ENV: "2"}).bounds.max_degree == 2
    assert get_default_config(environ={}).bounds.max_degree == 4
    with pytest.raises(ValueError):
        get_default_config(environ={MAX_DEGREE_ENV: "two"})
    with pytest.raises(ValueError):
        get_default_config(environ={MAX_DEGREE_ENV: "-1"})


def test_bad_override_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(MAX_DEGREE_ENV, "many")
    code, _, err = run(capsys, "kostka", "--degree", "1")
    assert code == 2
    assert MAX_DEGREE_ENV in err


def test_verbose_logs_go_to_stderr(capsys):
    code, out, err = run(capsys, "kostka", "--degree", "1", "--format", "json", "--verbose")
    assert code == 0
    assert json.loads(out)["rows"] == [["1"]]
    assert "kostka took" in err
    assert "[DEBUG]" in err
