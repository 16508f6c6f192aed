"""Command-line front end.

Usage:
    stringgrass check row6.json --dot
    stringgrass chi row3.json --e 1,0,0
    stringgrass table --p 1 --n 2 --kind regular --format csv
    stringgrass table --file row5.json --format json
    stringgrass verify --pmax 2 --nmax 2

Exit codes: 0 success, 2 representation not monomial, 3 unreadable input,
4 invalid parameter, 5 formula/enumeration mismatch.  Timing goes to stderr
so that stdout is byte-for-byte reproducible.
"""
from __future__ import annotations

import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

import click

from . import ap1
from .coefficient import build_coefficient_quiver, classify_string
from .counting import chi, chi_table
from .degrees import Infeasible, solve_degrees, string_degrees
from .quiver import (
    KINDS,
    REGULAR,
    Ap1Family,
    DimensionMismatch,
    InvalidParameter,
    RepresentationError,
    build_ap1_module,
    load,
)
from .verify import run_sweep

EXIT_NOT_MONOMIAL = 2
EXIT_PARSE = 3
EXIT_PARAM = 4
EXIT_MISMATCH = 5


@dataclass
class RunReport:
    input: str
    classification: dict
    certification: dict
    result: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str):
    try:
        return load(path)
    except (OSError, RepresentationError) as exc:
        _fail(EXIT_PARSE, f"cannot read {path}: {exc}")


def _vertex_name(v) -> str:
    return f"{v[0]}.{v[1]}"


def classification_of(rep) -> dict:
    cls = classify_string(rep)
    return {
        "monomial": cls.is_monomial,
        "string": cls.is_string,
        "orientable": cls.is_string and cls.is_orientable,
    }


def certification_of(rep) -> dict:
    """Degree assignment certifying the torus action, or the infeasibility witness."""
    cls = classify_string(rep)
    if cls.is_string and cls.is_orientable:
        deg, method = string_degrees(cls), "chain-position"
    else:
        deg, method = solve_degrees(build_coefficient_quiver(rep)), "linear-solve"
    if isinstance(deg, Infeasible):
        return {
            "certified": False,
            "method": method,
            "witness": [_vertex_name(v) for v in deg.witness],
        }
    return {"certified": True, "method": method, **deg.to_dict()}


def _parse_e(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        _fail(EXIT_PARAM, f"--e must be comma-separated integers, got {text!r}")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _timing(start: float):
    click.echo(f"time_ms={(time.perf_counter() - start) * 1000:.1f}", err=True)


@click.group()
def main():
    """Euler characteristics of quiver Grassmannians by torus fixed-point counting."""


@main.command("check")
@click.argument("file")
@click.option("--dot", is_flag=True, help="Also print the coefficient quiver in DOT format.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def check_cmd(file, dot, fmt):
    """Classify a representation and look for a degree assignment."""
    start = time.perf_counter()
    rep = _load(file)
    report = RunReport(file, classification_of(rep), certification_of(rep))
    if dot:
        report.result["dot"] = build_coefficient_quiver(rep).to_dot()
    if fmt == "json":
        click.echo(report.to_json())
    else:
        c, cert = report.classification, report.certification
        click.echo(f"monomial={_yes(c['monomial'])}")
        click.echo(f"string={_yes(c['string'])}")
        click.echo(f"orientable={_yes(c['orientable'])}")
        click.echo(f"certified={_yes(cert['certified'])}")
        if cert["certified"]:
            click.echo(f"method={cert['method']}")
            click.echo("arrow_degrees " + " ".join(f"{k}={v}" for k, v in cert["arrow_degrees"].items()))
            click.echo("vertex_degrees " + " ".join(f"{k}={v}" for k, v in cert["vertex_degrees"].items()))
        else:
            click.echo("witness " + " ".join(cert["witness"]))
        if dot:
            click.echo(report.result["dot"], nl=False)
    _timing(start)


@main.command("chi")
@click.argument("file")
@click.option("--e", "e_text", required=True, help="Dimension vector, e.g. 1,0,0.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--oracle", is_flag=True, help="Force the exhaustive subset oracle.")
def chi_cmd(file, e_text, fmt, oracle):
    """Count chi_e for one dimension vector."""
    start = time.perf_counter()
    rep = _load(file)
    e = _parse_e(e_text)
    classification = classification_of(rep)
    if not classification["monomial"]:
        _fail(EXIT_NOT_MONOMIAL, "representation has a matrix with two nonzeros in a row or column")
    try:
        value = chi(rep, e, method="oracle" if oracle else "auto")
    except DimensionMismatch as exc:
        _fail(EXIT_PARAM, str(exc))
    report = RunReport(file, classification, certification_of(rep), {"e": list(e), "chi": str(value)})
    if fmt == "json":
        click.echo(report.to_json())
    else:
        click.echo(f"chi={value}")
        click.echo(f"certified={_yes(report.certification['certified'])}")
    _timing(start)


def _table_rows(table, fam):
    rows = []
    for e in table.box():
        row = {"e": list(e), "chi": str(table[e])}
        if fam is not None:
            f = ap1.chi_family(fam, e)
            row["formula"] = str(f)
            row["match"] = f == table[e]
        rows.append(row)
    return rows


@main.command("table")
@click.option("--file", "file", default=None, help="Representation JSON file.")
@click.option("--p", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--kind", type=click.Choice(KINDS), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--oracle", is_flag=True, help="Force the exhaustive subset oracle.")
def table_cmd(file, p, n, t, kind, fmt, oracle):
    """Emit the full table of chi_e, with the closed formula for A~(p,1) families."""
    start = time.perf_counter()
    fam = None
    if file is not None:
        rep = _load(file)
        source = file
    else:
        if p is None or n is None or kind is None:
            _fail(EXIT_PARAM, "give --file or all of --p, --n, --kind (and --t)")
        try:
            fam = Ap1Family(p, n, kind, None if kind == REGULAR else t)
        except InvalidParameter as exc:
            _fail(EXIT_PARAM, str(exc))
        rep = build_ap1_module(fam)
        source = f"{kind}(p={p},n={n}" + ("" if kind == REGULAR else f",t={t}") + ")"
    classification = classification_of(rep)
    if not classification["monomial"]:
        _fail(EXIT_NOT_MONOMIAL, "representation has a matrix with two nonzeros in a row or column")
    try:
        table = chi_table(rep, method="oracle" if oracle else "auto")
    except ValueError as exc:
        _fail(EXIT_PARAM, str(exc))
    rows = _table_rows(table, fam)
    if fmt == "json":
        report = RunReport(source, classification, certification_of(rep),
                           {"vertices": list(table.vertices), "dims": list(table.dims), "rows": rows})
        click.echo(report.to_json())
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = [f"e_{v}" for v in table.vertices] + ["chi"]
        if fam is not None:
            header += ["formula", "match"]
        w.writerow(header)
        for row in rows:
            out = row["e"] + [row["chi"]]
            if fam is not None:
                out += [row["formula"], "true" if row["match"] else "false"]
            w.writerow(out)
        click.echo(buf.getvalue(), nl=False)
    _timing(start)
    if fam is not None and not all(r["match"] for r in rows):
        sys.exit(EXIT_MISMATCH)


@main.command("verify")
@click.option("--pmax", type=int, default=2)
@click.option("--nmax", type=int, default=2)
@click.option("--kmax", type=int, default=8, help="Largest n for the Kronecker formulas.")
@click.option("--oracle", is_flag=True, help="Enumerate with the exhaustive subset oracle.")
@click.option("--inject-fault", is_flag=True, hidden=True,
              help="Evaluate formulas with the polynomial binomial (test mode).")
def verify_cmd(pmax, nmax, kmax, oracle, inject_fault):
    """Check every closed formula against enumeration, plus the binomial identities."""
    start = time.perf_counter()
    if pmax < 1 or nmax < 1 or kmax < 1:
        _fail(EXIT_PARAM, "--pmax, --nmax and --kmax must be >= 1")
    method = "oracle" if oracle else "coordinate"
    if inject_fault:
        with ap1.binomial_convention(ap1.generalized_binom):
            report = run_sweep(pmax, nmax, kmax, method=method, workers=1)
    else:
        report = run_sweep(pmax, nmax, kmax, method=method)
    click.echo(f"checks={report.checks}")
    click.echo(f"mismatches={len(report.mismatches)}")
    if report.ok:
        click.echo("status=pass")
    else:
        click.echo("status=fail")
        click.echo("counterexample " + report.mismatches[0].describe())
    _timing(start)
    if not report.ok:
        sys.exit(EXIT_MISMATCH)


if __name__ == "__main__":
    main()
