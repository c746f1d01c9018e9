import csv
import io
import json
import subprocess
from fractions import Fraction

import pytest

from xbannaito.cli import bi_main, parse_config, run, seeds_main, xbi_main


def call(tool, *argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(tool, parse_config(tool, list(argv)), stream=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_bi_poly_json():
    code, out, _ = call("bi", "poly", "--n", "1")
    data = json.loads(out)
    assert code == 0
    assert data["data"]["eigenvalue"] == "-1501/1155"
    assert data["data"]["coefficients"][-1] == "1/1"


def test_bi_grid_csv():
    code, out, _ = call("bi", "grid", "--N", "3", "--truncate", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["s", "x", "weight"]
    assert rows[1][1] == "1/5" and rows[1][2] == "1/1"


def test_grid_without_truncation_is_precondition_error():
    code, _, err = call("bi", "grid", "--N", "7")
    assert code == 2 and "TruncationViolated" in err


def test_inadmissible_seed_exit_2():
    code, _, err = call("xbi", "poly", "--d", "4", "--m", "0", "--n", "2")
    assert code == 2 and "InadmissibleSeed" in err


def test_bad_rational_exit_2(capsys):
    assert xbi_main(["poly", "--d", "3", "--m", "1", "--n", "2", "--params", "1/0,1,1,1"]) == 2
    assert xbi_main(["poly", "--d", "3", "--m", "1", "--n", "2", "--bogus"]) == 2


def test_params_order_is_r_first():
    cfg = parse_config("xbi", ["poly", "--d", "3", "--m", "1", "--n", "0",
                               "--params", "1/7,1/11,1/3,1/5"])
    p = cfg.params
    assert (p.r1, p.r2, p.rho1, p.rho2) == (Fraction(1, 7), Fraction(1, 11),
                                            Fraction(1, 3), Fraction(1, 5))


def test_gram_csv_is_diagonal():
    code, out, _ = call("xbi", "gram", "--d", "3", "--m", "1", "--N", "7", "--truncate",
                        "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "n\\m"
    for i, row in enumerate(rows[1:]):
        for j, cell in enumerate(row[1:]):
            assert (cell == "0/1") == (i != j)


def test_gram_with_null_norm_exit_1():
    code, out, _ = call("xbi", "gram", "--d", "5", "--m", "1", "--N", "7", "--truncate")
    checks = {c["check"]: c for c in json.loads(out)["checks"]}
    assert code == 1
    assert checks["off-diagonal"]["status"] == "pass"
    assert checks["nonzero norms"]["zero"] == checks["nonzero norms"]["predicted"]


def test_verify_schema():
    code, out, _ = call("xbi", "verify", "--d", "3", "--m", "1", "--nmax", "3")
    entry = json.loads(out)["checks"][0]
    assert code == 0
    assert set(entry) == {"check", "status", "seed"} and entry["status"] == "pass"


def test_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        call("xbi", "degrees", "--d", "1", "--m", "3", "--nmax", "8", "--output", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_unwritable_output(tmp_path):
    code, _, err = call("bi", "poly", "--n", "2", "--output", str(tmp_path / "no" / "x.json"))
    assert code == 2 and "cannot write" in err


def test_csv_not_available_for_verify():
    code, _, _ = call("xbi", "verify", "--d", "3", "--m", "1", "--format", "csv")
    assert code == 2


def test_seeds_commands():
    code, out, _ = call("seeds", "show", "--d", "5")
    assert code == 0 and json.loads(out)["data"]["5"]["kappa"] == 1
    code, out, _ = call("seeds", "verify-appendix", "--mmax", "3", "--nmax", "3")
    assert code == 0 and json.loads(out)["ok"]


def test_chain_and_variant():
    code, out, _ = call("xbi", "chain", "--seeds", "1,3", "--m", "5")
    assert code == 0
    assert [c["check"] for c in json.loads(out)["checks"]] == [
        "determinant equals recursion", "eigen-equation"]
    code, out, _ = call("xbi", "variant", "--case", "5.7", "--d", "3", "--m", "1", "--n", "2")
    assert code == 0


def test_positivity_strict_reports_failure():
    code, out, _ = call("xbi", "positivity", "--d", "3", "--N", "7", "--samples", "3")
    data = json.loads(out)["data"]
    assert code == 0 and data["E_positive"] == 3
    code, _, _ = call("xbi", "positivity", "--d", "3", "--N", "7", "--samples", "3", "--strict")
    assert code == 1


@pytest.mark.parametrize("argv", [["bi", "poly", "--n", "2"], ["seeds", "show", "--d", "1"],
                                  ["xbi", "degrees", "--d", "2", "--m", "1", "--nmax", "4"]])
def test_console_scripts(argv):
    res = subprocess.run(argv, capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["ok"]


def test_entry_points_return_codes(capsys):
    assert bi_main(["poly", "--n", "0"]) == 0
    assert seeds_main(["show", "--d", "2"]) == 0
