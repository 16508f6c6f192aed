"""Formula-versus-enumeration sweeps and combinatorial identity checks."""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import ap1
from .counting import chi_table
from .quiver import KINDS, PREINJECTIVE, PREPROJECTIVE, REGULAR, Ap1Family, build_ap1_module


@dataclass(frozen=True, order=True)
class Mismatch:
    check: str
    params: tuple
    e: tuple
    expected: int
    got: int

    def describe(self) -> str:
        return f"{self.check} params={self.params} e={self.e}: formula={self.expected} enumeration={self.got}"


@dataclass
class SweepReport:
    checks: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: "SweepReport") -> None:
        self.checks += other.checks
        self.mismatches.extend(other.mismatches)


def family_cases(pmax: int, nmax: int, regular_nmax: int | None = None, n_min: int = 0):
    regular_nmax = nmax if regular_nmax is None else regular_nmax
    cases = []
    for p in range(1, pmax + 1):
        for n in range(n_min, nmax + 1):
            for t in range(1, p + 1):
                cases.append(Ap1Family(p, n, PREPROJECTIVE, t))
                cases.append(Ap1Family(p, n, PREINJECTIVE, t))
        for n in range(1, regular_nmax + 1):
            cases.append(Ap1Family(p, n, REGULAR))
    return cases


def _family_params(fam: Ap1Family) -> tuple:
    return (fam.kind, fam.p, fam.n) if fam.t is None else (fam.kind, fam.p, fam.n, fam.t)


def check_family(fam: Ap1Family, method: str = "coordinate") -> SweepReport:
    """Compare the closed formula for ``fam`` with enumeration at every e in the box.

    For p = 1 the Kronecker formulas are checked as well.
    """
    table = chi_table(build_ap1_module(fam), method=method)
    report = SweepReport()
    evaluators = [("formula", ap1.chi_family)]
    if fam.p == 1:
        evaluators.append(("kronecker", ap1.chi_kronecker_family))
    for e in table.box():
        for name, fn in evaluators:
            report.checks += 1
            value = fn(fam, e)
            if value != table[e]:
                report.mismatches.append(Mismatch(name, _family_params(fam), e, value, table[e]))
    return report


def check_duality(pmax: int, nmax: int) -> SweepReport:
    report = SweepReport()
    for p in range(1, pmax + 1):
        for n in range(nmax + 1):
            for t in range(1, p + 1):
                dims = Ap1Family(p, n, PREINJECTIVE, t).dims()
                for e in itertools.product(*(range(d + 1) for d in dims)):
                    report.checks += 1
                    lhs = ap1.chi_preinjective(p, n, t, e)
                    rhs = ap1.chi_preprojective(p, n, p + 1 - t, ap1.reflect(e, dims))
                    if lhs != rhs:
                        report.mismatches.append(Mismatch("duality", (p, n, t), e, rhs, lhs))
    return report


def check_kronecker_identities(nmax: int) -> SweepReport:
    """Kronecker duality and the regular recursion on the box [0, n+1]^2."""
    report = SweepReport()
    for n in range(nmax + 1):
        for e in itertools.product(range(n + 2), repeat=2):
            report.checks += 1
            lhs = ap1.chi_kronecker_preinjective(n, e)
            rhs = ap1.chi_kronecker_preprojective(n, (n + 1 - e[1], n - e[0]))
            if lhs != rhs:
                report.mismatches.append(Mismatch("kronecker-duality", (n,), e, rhs, lhs))
            if n >= 1:
                report.checks += 1
                lhs = ap1.chi_kronecker_regular(n, e)
                rhs = ap1.chi_kronecker_regular(n - 1, (e[0] - 1, e[1] - 1))
                rhs += ap1.chi_kronecker_preprojective(n - 1, e)
                if lhs != rhs:
                    report.mismatches.append(Mismatch("regular-recursion", (n,), e, rhs, lhs))
    return report


def check_lemmas(nmax: int = 12) -> SweepReport:
    """Component-count lemmas against brute force, Vandermonde, and the binomial swap identity."""
    report = SweepReport()
    binom = ap1.binom
    for n in range(1, nmax + 1):
        for r in range(n + 1):
            for c in range(n + 2):
                for flag in (None, True, False):
                    report.checks += 1
                    got = ap1.brute_subsets_with_components(n, r, c, flag)
                    want = ap1.count_subsets_with_components(n, r, c, flag)
                    if got != want:
                        report.mismatches.append(Mismatch("components", (n, r, c, flag), (), want, got))
    for a, b, c in itertools.product(range(nmax + 1), repeat=3):
        report.checks += 1
        lhs = sum(binom(a, k) * binom(b, c - k) for k in range(c + 1))
        if lhs != binom(a + b, c):
            report.mismatches.append(Mismatch("vandermonde", (a, b, c), (), binom(a + b, c), lhs))
    for p in range(nmax + 1):
        for q in range(p + 1):
            for r in range(q + 1):
                report.checks += 1
                lhs = binom(p, q) * binom(q, r)
                rhs = binom(p, r) * binom(p - r, q - r)
                if lhs != rhs:
                    report.mismatches.append(Mismatch("binomial-swap", (p, q, r), (), rhs, lhs))
    return report


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("STRINGGRASS_THREADS", os.cpu_count() or 1)))
    except ValueError:
        return 1


def run_sweep(
    pmax: int,
    nmax: int,
    kmax: int = 8,
    lemma_nmax: int = 12,
    method: str = "coordinate",
    workers: int | None = None,
    regular_nmax: int | None = None,
) -> SweepReport:
    """The full verification: every family formula, Kronecker n <= kmax, and the identities.

    Mismatches are returned sorted, so the first one is deterministic
    whatever the number of workers.  Regular families run one size further
    than ``nmax`` unless ``regular_nmax`` says otherwise.
    """
    regular_nmax = nmax + 1 if regular_nmax is None else regular_nmax
    cases = [f for f in family_cases(pmax, nmax, regular_nmax) if f.p > 1]
    cases += [Ap1Family(1, n, k, None if k == REGULAR else 1)
              for n in range(max(kmax, nmax) + 1) for k in KINDS if not (k == REGULAR and n == 0)]
    workers = _threads() if workers is None else workers
    report = SweepReport()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(check_family, cases, itertools.repeat(method)))
    else:
        parts = [check_family(f, method) for f in cases]
    for part in parts:
        report.merge(part)
    report.merge(check_duality(pmax, nmax))
    report.merge(check_kronecker_identities(max(kmax, nmax)))
    report.merge(check_lemmas(lemma_nmax))
    report.mismatches.sort(key=lambda m: (m.check, repr(m.params), m.e))
    return report

