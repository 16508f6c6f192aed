from stringgrass import PREPROJECTIVE, REGULAR, Ap1Family
from stringgrass.ap1 import binomial_convention, generalized_binom
from stringgrass.verify import (
    Mismatch,
    check_duality,
    check_family,
    check_kronecker_identities,
    check_lemmas,
    family_cases,
    run_sweep,
)


def test_family_cases_shape():
    cases = family_cases(2, 1, regular_nmax=3)
    regular = [f for f in cases if f.kind == REGULAR]
    assert sorted((f.p, f.n) for f in regular) == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
    assert len(cases) == 2 * 2 * (1 + 2) + len(regular)


def test_check_family_counts_every_e():
    report = check_family(Ap1Family(2, 1, PREPROJECTIVE, 1))
    assert report.ok
    assert report.checks == 3 * 2 * 2
    kron = check_family(Ap1Family(1, 2, REGULAR))
    assert kron.ok and kron.checks == 2 * 9


def test_identity_checks_pass():
    assert check_duality(3, 3).ok
    assert check_kronecker_identities(8).ok
    assert check_lemmas(8).ok


def test_fault_shows_up_and_is_sorted():
    with binomial_convention(generalized_binom):
        report = run_sweep(2, 1, kmax=2, lemma_nmax=4, workers=1)
    assert not report.ok
    assert report.mismatches == sorted(report.mismatches, key=lambda m: (m.check, repr(m.params), m.e))
    assert isinstance(report.mismatches[0], Mismatch)
    assert "formula=" in report.mismatches[0].describe()


def test_parallel_matches_serial():
    serial = run_sweep(2, 2, kmax=3, lemma_nmax=4, workers=1)
    parallel = run_sweep(2, 2, kmax=3, lemma_nmax=4, workers=2)
    assert serial.ok and parallel.ok
    assert serial.checks == parallel.checks
