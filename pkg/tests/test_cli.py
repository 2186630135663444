import json

import pytest

from qpv.cli import main, parse_params, read_config
from qpv.errors import UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and out.splitlines()[0].startswith("fin-gg-1")
    code, out, _ = run(capsys, "list", "--format", "json")
    assert {"identity", "params", "exact"} <= set(json.loads(out)[0])


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "fin-gg-1", "--N", "8")[0] == 0
    assert run(capsys, "verify", "fin-gg-1", "--N=3", "--format", "json")[0] == 0
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2 and "unknown" in err
    assert run(capsys, "verify", "fin-gg-1", "--N", "x")[0] == 2
    assert run(capsys, "verify", "fin-gg-1", "--N", "99")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_json_line(capsys):
    code, out, _ = run(capsys, "verify", "rr-analytic", "--i", "2", "--trunc", "25", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["params"] == {"i": 2} and d["truncation"] == 25 and d["status"] == "verified"


def test_truncation_precedence(capsys, tmp_path, monkeypatch):
    def trunc(*extra):
        _, out, _ = run(capsys, *extra, "verify", "euler-analytic", "--format", "json")
        return json.loads(out)["truncation"]

    assert trunc() == 100
    monkeypatch.setenv("QPV_TRUNC", "20")
    assert trunc() == 20
    cfg = tmp_path / "qpv.cfg"
    cfg.write_text("# local defaults\ntrunc = 30\nworkers=2\n")
    assert trunc("--config", str(cfg)) == 30
    _, out, _ = run(capsys, "--config", str(cfg), "verify", "euler-analytic", "--trunc", "12", "--format", "json")
    assert json.loads(out)["truncation"] == 12


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour=blue\n")
    assert run(capsys, "--config", str(cfg), "list")[0] == 2
    assert run(capsys, "--config", str(tmp_path / "missing.cfg"), "list")[0] == 2
    cfg.write_text("trunc\n")
    with pytest.raises(UsageError):
        read_config(str(cfg))


def test_parse_params():
    assert parse_params(["--N", "3", "--k=2"]) == {"N": 3, "k": 2}
    with pytest.raises(UsageError):
        parse_params(["N", "3"])
    with pytest.raises(UsageError):
        parse_params(["--N"])


def test_verify_all_subset_via_cli(capsys):
    code, out, _ = run(capsys, "verify-all", "--trunc", "15", "--workers", "2")
    assert code == 0
    assert out.splitlines()[-1].endswith("verified")


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "euler-product", "--trunc", "5")
    assert code == 0 and out.strip() == "1 + q + q^2 + 2*q^3 + 2*q^4 + 3*q^5 + O(q^6)"
    code, out, _ = run(capsys, "expand", "ug-bounded", "--k", "2", "--l", "1", "--N", "3", "--trunc", "6")
    assert code == 0 and "x" in out
    assert run(capsys, "expand", "euler-product", "--bogus", "1")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "UG(2,1)", "--max-norm", "4")
    assert code == 0
    assert out.splitlines() == ["()", "(1)", "(1,3)", "(2)", "(3)", "(4)", "# 6 partitions"]
    code, out, _ = run(capsys, "enumerate", "--family", "GG1", "--max-part", "5", "--max-norm", "10", "--format", "json")
    d = json.loads(out)
    assert d["count"] == len(d["partitions"]) == 12
    assert run(capsys, "enumerate", "--family", "XX", "--max-norm", "3")[0] == 2
    assert run(capsys, "enumerate", "--family", "GG1")[0] == 2
    assert run(capsys, "enumerate", "--family", "GG1", "--max-norm", "-1")[0] == 2
