from __future__ import annotations

import csv
import hashlib
import io
import json
import subprocess
import sys

import pytest

from gfkit import suites
from gfkit.cli import main


def run(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def rows(text: str) -> list[list[str]]:
    return [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]


def test_series_expand_csv():
    code, out = run("series", "expand", "--C", "euler", "--N", "7")
    assert code == 0
    assert rows(out)[1:] == [[str(n), c] for n, c in enumerate(["1", "-1", "-1", "0", "0", "1", "0", "1"])]
    assert out.startswith("# config: ")


def test_series_arith_recip():
    code, out = run("series", "arith", "--a", "coeffs:1,-1", "--op", "recip", "--N", "4")
    assert code == 0 and [r[1] for r in rows(out)[1:]] == ["1"] * 5


def test_series_arith_requires_b():
    code, _ = run("series", "arith", "--a", "euler", "--op", "mul")
    assert code == 2


def test_fn_eval_and_inverse():
    _, out = run("fn", "eval", "--name", "phi", "--n", "6")
    assert [r[1] for r in rows(out)[1:]] == ["1", "1", "2", "2", "4", "2"]
    _, out = run("fn", "inverse", "--name", "one", "--n", "6")
    assert [r[1] for r in rows(out)[1:]] == ["1", "-1", "-1", "0", "-1", "1"]


def test_unknown_function_exit_2(capsys):
    code, _ = run("fn", "eval", "--name", "bogus")
    assert code == 2
    assert "gfkit fn list" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["gcd", "t-matrix", "--N", "many"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_lgf_matrix_json():
    _, out = run("lgf", "matrix", "--N", "5", "--inverse", "--format", "json")
    obj = json.loads(out)
    assert obj["matrices"]["s"][4] == ["-1", "-1", "-1", "-1", "1"]
    assert obj["matrices"]["s_inv"][4] == ["4", "3", "2", "1", "1"]
    assert obj["config"] == {"subcommand": "lgf", "action": "matrix", "format": "json", "seed": 7, "params": {"C": "euler", "N": 5, "inverse": True}}


def test_gcd_mu_triangle_latex():
    code, out = run("gcd", "mu-triangle", "--N", "4", "--format", "latex")
    assert code == 0 and "1 & -1 & -1 & 1" in out


def test_u_inverse_symbolic():
    _, out = run("gcd", "u-inverse", "--f", "id", "--N", "2")
    assert "w + 3w^2" in out.replace("*", "")


def test_gcd_verify_dft():
    code, out = run("gcd", "verify", "--suite", "dft", "--kmax", "12", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["meta"]["failures"] == 0
    assert all(r["status"] == "pass" for r in obj["meta"]["reports"])


def test_genconv_d_inverse_methods_differ():
    _, rec = run("genconv", "d-inverse", "--D", "one", "--g", "rand", "--N", "6")
    _, closed = run("genconv", "d-inverse", "--D", "one", "--g", "rand", "--N", "6", "--method", "closed")
    assert rows(rec)[1:] != rows(closed)[1:]


def test_corr_lgf_trace_and_figure(tmp_path):
    trace, fig = tmp_path / "t.csv", tmp_path / "f.png"
    code, out = run("corr", "lgf", "--a", "3", "--b", "1", "--N", "200", "--trace", str(trace), "--figure", str(fig))
    assert code == 0
    obj = json.loads(out)
    assert obj["meta"]["converged"] in (True, False)
    assert trace.read_text().splitlines()[0].startswith("# config")
    png = fig.read_bytes()
    assert png[:8] == b"\x89PNG\r\n\x1a\n"
    run("corr", "lgf", "--a", "3", "--b", "1", "--N", "200", "--figure", str(fig))
    assert hashlib.md5(fig.read_bytes()).digest() == hashlib.md5(png).digest()


def test_smooth_probe_and_table():
    code, out = run("smooth", "probe", "--f", "sigma1", "--H", "40", "--kind", "s2", "--format", "csv")
    assert code == 0 and rows(out)
    code, out = run("smooth", "table", "--id", "smooth-1", "--format", "json")
    assert code == 0 and json.loads(out)["meta"]["matches_printed"] is True


def test_config_layers(tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text('seed = 3\n[gcd]\nN = 5\n["gcd.t-matrix"]\nN = 6\n')
    _, out = run("gcd", "t-matrix", "--config", str(cfg), "--format", "json")
    obj = json.loads(out)
    assert obj["config"]["seed"] == 3 and obj["config"]["params"]["N"] == 6
    _, out = run("gcd", "t-matrix", "--config", str(cfg), "--N", "4", "--format", "json")
    assert json.loads(out)["config"]["params"]["N"] == 4


def test_config_unknown_key(tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[gcd]\nbogus = 1\n")
    assert run("gcd", "t-matrix", "--config", str(cfg))[0] == 2
    assert run("gcd", "t-matrix", "--config", str(tmp_path / "missing.toml"))[0] == 2


def test_out_file(tmp_path):
    p = tmp_path / "a.json"
    code, out = run("tables", "--id", "A3", "--format", "json", "--out", str(p))
    assert code == 0 and out == ""
    assert json.loads(p.read_text())["meta"]["matches_printed"] is True


def test_tables_directory(tmp_path):
    d = tmp_path / "tables"
    code, out = run("tables", "--out", str(d), "--format", "csv")
    assert code == 0
    index = rows(out)
    assert index[0] == ["id", "path", "matches_printed"]
    ids = [r[0] for r in index[1:]]
    assert {"pentagonal", "A5", "mu-triangle", "t-matrix", "corr-lgf", "nonsmooth-5"} <= set(ids)
    assert all((d / f"{i}.csv").exists() for i in ids)
    status = {r[0]: r[2] for r in index[1:]}
    assert status["corr-lgf"] == "false"
    assert all(v == "true" for k, v in status.items() if k != "corr-lgf")


def test_tables_unknown_id():
    assert run("tables", "--id", "Z9")[0] == 2


def test_verify_single_suite_and_byte_identity():
    a = run("verify", "--suite", "pseries")
    b = run("verify", "--suite", "pseries")
    assert a == b and a[0] == 0
    assert '"seconds"' not in a[1]


def test_verify_exit_1_on_failure(monkeypatch):
    def broken(seed):
        r = suites.SuiteResult("pseries")
        r.add("deliberately false", False)
        return r

    monkeypatch.setitem(suites.SUITES, "pseries", broken)
    code, out = run("verify", "--suite", "pseries")
    assert code == 1 and json.loads(out)["meta"]["failures"] == 1


def test_console_script_help():
    res = subprocess.run([sys.executable, "-m", "gfkit.cli", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "verify" in res.stdout
