"""Acceptance criteria, one test each, each printing a single PASS/FAIL line."""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from binomdiv import central_divisibility as cd
from binomdiv import congruences as cg
from binomdiv import floor_lemmas as fl
from binomdiv import precision as hp
from binomdiv import sequences as sq
from binomdiv import wz

# Values as printed in the source table.
S_PUBLISHED = [5, 231, 14568, 1062347, 84021990, 7012604550, 607892634420, 54200780036595]
T_PUBLISHED = [1, 32, 1792, 122880, 9371648, 763363328, 65028489216, 5722507051008]


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return report


def test_criterion_01_sequence_tables(verdict):
    s = sq.s_sequence(8).terms
    t = sq.t_sequence(8).terms
    a = sq.a_sequence_recurrence(2).terms
    bad = [(i, got, want) for i, (got, want) in enumerate(zip(s, S_PUBLISHED), start=1) if got != want]
    ok = not bad and t == T_PUBLISHED and a == [1, 11]
    detail = "S, T, a tables match" if ok else f"S mismatches (index, computed, published): {bad}"
    verdict(1, ok, detail)


def test_criterion_02_quotient_even(verdict):
    even = cd.verify_quotient_even(2000)
    vals = cd.check_quotient_valuations(500)
    ok = even.status == "pass" and even.checked == 2000 and vals.status == "pass"
    verdict(2, ok, f"Q(n) even for n<=2000; {vals.checked} valuation comparisons for n<=500")


def test_criterion_03_product_divisibility(verdict):
    triple = cd.verify_triple(300, 300)
    cat = cd.verify_catalan(300, 300, include_n0=True)
    in_scope = [c for c in cat.counterexamples if c.in_scope]
    findings = [(c.params, c.detail) for c in cat.findings]
    ok = triple.status == "pass" and not in_scope and findings == [((0, 1), "ratio 1/2")]
    verdict(3, ok, f"triple ratio integral on {triple.checked} cases; Catalan ratio findings {findings}")


def test_criterion_04_floor_lemmas(verdict):
    reports = [fl.verify_q_inequality(100), fl.verify_triple_inequality(100), fl.verify_catalan_inequality(100)]
    ok = all(r.status == "pass" for r in reports)
    verdict(4, ok, "; ".join(f"{r.claim_id}: {r.checked} residue cases" for r in reports))


def test_criterion_05_wz(verdict):
    reports = [wz.check_wz_difference(wz.BAUER, 100, 100), wz.check_wz_difference(wz.RAMANUJAN, 100, 100),
               wz.telescoping_report(wz.BAUER, 200), wz.telescoping_report(wz.RAMANUJAN, 200),
               wz.verify_bauer_divisibility(500), wz.verify_ramanujan_divisibility(500)]
    spots = wz.bauer_sum(1) == -24 and wz.ramanujan_sum(1) == -2520 and -2520 % 24 == 0
    ok = spots and all(r.status == "pass" for r in reports)
    verdict(5, ok, "difference equations n,k<=100, telescoping N<=200, divisibility N<=500, spots -24/-2520")


def test_criterion_06_sp_congruence(verdict):
    r = cg.check_sp_congruence(97)
    spot = sq.s_term(5) % 125 == 115 == (15 - 150 + 1500) % 125
    verdict(6, r.status == "pass" and spot, f"S_p = 15-30p+60p^2 mod p^3 for {r.checked} odd primes <= 97")


def test_criterion_07_conjectures(verdict):
    reports = [sq.check_s_parity_and_mod(2048, 1000), cg.check_s_weighted_sum(199), cg.check_t_prime_residue(97),
               wz.verify_a_integrality(300), cg.check_205_supercongruences(97),
               cg.check_28k_supercongruences(97), wz.verify_28k_divisibility(200)]
    findings = sum(len(r.findings) for r in reports)
    verdict(7, findings == 0, f"{findings} findings over {sum(r.checked for r in reports)} conjecture cases")


def test_criterion_08_series(verdict):
    checks = [hp.check_identity(i, 30) for i in hp.SERIES]
    diffs = ", ".join(f"{c.identity_id} {float(c.difference):.1e}" for c in checks)
    verdict(8, all(c.holds for c in checks), f"30 digits: {diffs}")


def test_criterion_09_stirling(verdict):
    ratios = {n: sq.stirling_ratio(n) for n in (100, 1000)}
    gaps = [abs(ratios[n].mid - 1) for n in (100, 1000)]
    r1000 = ratios[1000]
    ok = Fraction(99, 100) < r1000.mid - r1000.rad and r1000.mid + r1000.rad < Fraction(101, 100) and gaps[1] < gaps[0]
    verdict(9, ok, f"ratio(100)={float(ratios[100].mid):.6f}, ratio(1000)={float(r1000.mid):.6f}")


def test_criterion_10_full_suite(verdict):
    start = time.time()
    proc = subprocess.run([sys.executable, "-m", "binomdiv", "all", "--profile", "full"],
                          capture_output=True, text=True)
    elapsed = time.time() - start
    ok = proc.returncode == 0 and elapsed < 30 * 60
    verdict(10, ok, f"all --profile full: exit {proc.returncode} in {elapsed:.0f}s; {proc.stdout.splitlines()[-1]}")
