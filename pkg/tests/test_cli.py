import json
import subprocess
import sys

from volkenborn.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series(capsys):
    code, out, _ = run_cli(capsys, "series", "log1p", "--order", "4")
    assert code == 0
    assert out == "0\t0\n1\t1\n2\t-1/2\n3\t1/3\n4\t-1/4\n"


def test_series_family_egf(capsys):
    _, out, _ = run_cli(capsys, "series", "fubini", "--order", "3")
    assert out.splitlines()[3] == "3\t13/6"


def test_table(capsys):
    code, out, _ = run_cli(capsys, "table", "stirling2", "--max", "5")
    assert code == 0
    assert out.splitlines()[-1] == "5\t0\t1\t15\t25\t10\t1"
    _, out, _ = run_cli(capsys, "table", "LAMBDA_S2", "--max", "2", "--param", "1", "--format", "json")
    assert json.loads(out)[0]["rows"][2] == ["0", "1", "1"]


def test_seq(capsys):
    _, out, _ = run_cli(capsys, "seq", "bernoulli", "--max", "12")
    assert out.splitlines()[12] == "12\t-691/2730"
    _, out, _ = run_cli(capsys, "seq", "fubini", "--max", "4", "--format", "json")
    assert json.loads(out)["values"] == ["1", "1", "3", "13", "75"]


def test_poly_parse(capsys):
    _, out, _ = run_cli(capsys, "poly", "parse", "x^2 - x")
    assert out == "-x + x^2\n"
    _, out, _ = run_cli(capsys, "poly", "parse", "x^4", "--to", "falling")
    assert out == "ff(1) + 7*ff(2) + 6*ff(3) + ff(4)\n"


def test_poly_parse_error(capsys):
    code, _, err = run_cli(capsys, "poly", "parse", "x^")
    assert code == 2 and "error" in err


def test_integrate(capsys):
    _, out, _ = run_cli(capsys, "integrate", "--measure", "volkenborn", "--poly", "ff(3) + 2*ff(2)")
    assert out == "exact\t-1/6\n"
    _, out, _ = run_cli(capsys, "integrate", "--measure", "volkenborn", "--poly", "x", "--approx", "3,2")
    assert out == "exact\t-1/2\napprox\t4\nord_3\t2\n"
    _, out, _ = run_cli(capsys, "integrate", "--measure", "fermionic", "--poly", "1", "--approx", "3,1")
    assert out.splitlines()[-1] == "ord_3\tinf"


def test_verify_selected(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "VOLK.L1", "--id", "YE_ZERO", "--max-n", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id\tpaper_eq\ttested\tstatus\tcounterexample"
    assert lines[1].startswith("VOLK.L1\t") and lines[1].split("\t")[3] == "PASS"


def test_verify_json_with_errata(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "SEQ.UNIT_T", "--format", "json", "--errata")
    assert code == 0
    (d,) = json.loads(out)
    assert d["status"] == "ERRATUM_CANDIDATE" and d["report"]["kind"] == "declared"


def test_verify_unknown_id(capsys):
    code, _, err = run_cli(capsys, "verify", "--id", "NOPE")
    assert code == 2 and "unknown identity" in err


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    from fractions import Fraction

    from volkenborn.catalog import registry

    monkeypatch.setitem(registry.CHECKS, "c7", lambda R: iter([({"n": 1}, Fraction(1), Fraction(2))]))
    code, out, _ = run_cli(capsys, "verify", "--id", "VOLK.C7")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "volkenborn", "seq", "daehee1", "--max", "3"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "0\t1\n1\t-1/2\n2\t2/3\n3\t-3/2\n"
