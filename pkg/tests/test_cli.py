import csv
import io
import json

import pytest
from click.testing import CliRunner

from stringgrass import table1_fixture
from stringgrass.cli import main
from stringgrass.quiver import dumps


@pytest.fixture
def files(tmp_path):
    paths = {}
    for row in range(1, 7):
        p = tmp_path / f"row{row}.json"
        p.write_text(dumps(table1_fixture(row)))
        paths[row] = str(p)
    bad = tmp_path / "row1b.json"
    bad.write_text(dumps(table1_fixture(1, monomial=False)))
    paths["nonmono"] = str(bad)
    junk = tmp_path / "junk.json"
    junk.write_text("{ nope")
    paths["junk"] = str(junk)
    return paths


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def lines(result):
    return result.stdout.splitlines()


def test_chi_row3(files):
    r = run("chi", files[3], "--e", "1,0,0")
    assert r.exit_code == 0
    assert lines(r)[:2] == ["chi=2", "certified=yes"]


def test_chi_row2(files):
    r = run("chi", files[2], "--e", "0,1")
    assert r.exit_code == 0
    assert lines(r)[:2] == ["chi=0", "certified=yes"]


def test_chi_oracle_and_json(files):
    r = run("chi", files[3], "--e", "1,0,0", "--oracle", "--format", "json")
    assert r.exit_code == 0
    report = json.loads(r.stdout)
    assert report["result"] == {"e": [1, 0, 0], "chi": "2"}
    assert report["classification"] == {"monomial": True, "string": True, "orientable": True}
    assert report["certification"]["certified"] is True


def test_chi_not_monomial(files):
    r = run("chi", files["nonmono"], "--e", "1,0")
    assert r.exit_code == 2
    assert "nonzero" in r.stderr


def test_parse_errors(files, tmp_path):
    assert run("chi", files["junk"], "--e", "1").exit_code == 3
    assert run("check", str(tmp_path / "missing.json")).exit_code == 3
    assert run("chi", files[3], "--e", "1,x").exit_code == 4
    assert run("chi", files[3], "--e", "1,0").exit_code == 4


def test_check_row5(files):
    r = run("check", files[5])
    assert r.exit_code == 0
    out = lines(r)
    assert "string=yes" in out and "orientable=yes" in out and "certified=yes" in out
    assert "arrow_degrees a=1 b=1" in out


def test_check_row6(files):
    r = run("check", files[6], "--format", "json")
    assert r.exit_code == 0
    report = json.loads(r.stdout)
    assert report["classification"]["string"] is True
    assert report["classification"]["orientable"] is False
    cert = report["certification"]
    assert cert["certified"] and cert["method"] == "linear-solve"
    degs = cert["vertex_degrees"]
    assert len(set(degs.values())) == 4


def test_check_row2(files):
    r = run("check", files[2])
    out = lines(r)
    assert r.exit_code == 0
    assert "string=no" in out and "certified=yes" in out


def test_check_dot(files):
    r = run("check", files[5], "--dot")
    assert r.exit_code == 0
    assert 'digraph Q {' in r.stdout
    assert '"1.2" -> "1.3" [label="b"];' in r.stdout


def test_check_witness(tmp_path):
    from test_degrees import id_and_swap

    p = tmp_path / "swap.json"
    p.write_text(dumps(id_and_swap()))
    r = run("check", p, "--format", "json")
    assert r.exit_code == 0
    cert = json.loads(r.stdout)["certification"]
    assert cert["certified"] is False
    assert len(cert["witness"]) == 2
    assert cert["witness"][0].split(".")[0] == cert["witness"][1].split(".")[0]
    text = run("check", p)
    assert "certified=no" in lines(text)
    assert any(line.startswith("witness ") for line in lines(text))


def test_table_regular_kronecker():
    r = run("table", "--p", 1, "--n", 2, "--kind", "regular")
    assert r.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert list(rows[0]) == ["e_1", "e_2", "chi", "formula", "match"]
    assert len(rows) == 9
    assert all(row["match"] == "true" for row in rows)


def test_table_large_preprojective():
    r = run("table", "--p", 4, "--n", 3, "--kind", "preprojective", "--t", 3)
    assert r.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert len(rows) == 5 * 5 * 5 * 4 * 4  # dims (4, 4, 4, 3, 3)
    assert all(row["match"] == "true" for row in rows)


def test_table_parameter_errors():
    assert run("table", "--p", 0, "--n", 1, "--kind", "regular").exit_code == 4
    assert run("table", "--p", 2, "--n", 0, "--kind", "regular").exit_code == 4
    assert run("table", "--p", 2, "--n", 1, "--kind", "preprojective").exit_code == 4
    assert run("table", "--p", 2).exit_code == 4


def test_table_file_json(files):
    r = run("table", "--file", files[5], "--format", "json")
    assert r.exit_code == 0
    report = json.loads(r.stdout)
    assert [row["chi"] for row in report["result"]["rows"]] == ["1"] * 5
    assert "formula" not in report["result"]["rows"][0]
    csv_out = run("table", "--file", files[3])
    assert csv_out.stdout.splitlines()[0] == "e_1,e_2,e_3,chi"
    assert run("table", "--file", files["nonmono"]).exit_code == 2


def test_table_oracle_agrees():
    a = run("table", "--p", 2, "--n", 2, "--kind", "preinjective", "--t", 1)
    b = run("table", "--p", 2, "--n", 2, "--kind", "preinjective", "--t", 1, "--oracle")
    assert a.exit_code == b.exit_code == 0
    assert a.stdout == b.stdout


def test_table_deterministic():
    args = ("table", "--p", 3, "--n", 2, "--kind", "regular", "--format", "json")
    outs = {run(*args).stdout for _ in range(3)}
    assert len(outs) == 1


def test_verify_pass():
    r = run("verify", "--pmax", 2, "--nmax", 2)
    assert r.exit_code == 0
    assert "status=pass" in lines(r)
    assert "mismatches=0" in lines(r)


def test_verify_fault_injection():
    r = run("verify", "--pmax", 2, "--nmax", 1, "--kmax", 2, "--inject-fault")
    assert r.exit_code == 5
    out = lines(r)
    assert "status=fail" in out
    assert any(line.startswith("counterexample ") for line in out)


def test_verify_bounds():
    assert run("verify", "--pmax", 0).exit_code == 4


def test_timing_only_on_stderr(files):
    r = run("chi", files[3], "--e", "1,0,0")
    assert "time_ms=" in r.stderr
    assert "time_ms" not in r.stdout
