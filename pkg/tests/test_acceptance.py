"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
Every check is exact; the only numeric thresholds are the runtime budgets.
"""
import os
import random
import time
from fractions import Fraction

import pytest

from bmsturm import boros_moll as bm
from bmsturm.log_concavity import k_log_concave
from bmsturm.poly import Poly, evaluate, squarefree_part
from bmsturm.real_roots import count_real_roots, is_real_rooted, isolate_real_roots
from bmsturm.verification import (
    branden_random_property,
    check_liu_wang_side_conditions,
    verify_coefficient_identities,
    verify_k_logconcavity,
    verify_liu_wang,
    verify_polynomial_recurrences,
    verify_sturm_sequence,
)

JOBS = max(1, min(4, os.cpu_count() or 1))


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else ""))
        return ok
    return emit


def test_c1_four_routes_agree(verdict):
    t0 = time.perf_counter()
    closed = [bm.bm_row_closed(n) for n in range(31)]
    double = [bm.bm_row_double_sum(n) for n in range(31)]
    ok = closed == double == bm.rows_by_rec1(30) == bm.rows_by_rec2(30)
    dt = time.perf_counter() - t0
    assert verdict(1, "four coefficient routes agree, 0 <= n <= 30", ok and dt < 10, f"{dt:.2f}s")
    assert ok and dt < 10


def test_c2_anchor_values(verdict):
    F = Fraction
    ok = (bm.bm_row_closed(1).d == (F(3, 2), F(1))
          and bm.bm_row_closed(2).d == (F(21, 8), F(15, 4), F(3, 2))
          and bm.q_polynomial(2) == Poly([F(21, 8), F(15, 4), F(3, 4)])
          and bm.r_polynomial(2) == Poly([F(21, 16), F(5, 8), F(1, 16)]))
    assert verdict(2, "anchor rows d(1), d(2) and Q_2, R_2", ok)


def test_c3_polynomial_recurrences(verdict):
    t0 = time.perf_counter()
    rep = verify_polynomial_recurrences(50)
    direct = all(bm.q_polynomial_rec(n) == bm.q_polynomial(n) and bm.r_polynomial_rec(n) == bm.r_polynomial(n)
                 for n in (0, 1, 2, 17, 50))
    dt = time.perf_counter() - t0
    ok = rep.passed and direct and dt < 60
    assert verdict(3, "Q and R recurrences reproduce direct construction, n <= 50", ok, f"{dt:.2f}s")


@pytest.mark.parametrize("family", ["q", "r"])
def test_c4_sturm_sequences(verdict, family):
    t0 = time.perf_counter()
    rep = verify_sturm_sequence(family, 50, jobs=JOBS)
    base_ok = True
    if family == "r":
        rs = [bm.r_polynomial(n) for n in range(4)]
        base_ok = all(is_real_rooted(r) and r.degree == n for n, r in enumerate(rs))
        # R_1 has its root at -9/2, R_2 at roots of x^2 + 10x + 21 = (x+3)(x+7)
        base_ok &= rs[1] == Poly([Fraction(3, 4), Fraction(1, 6)])
        base_ok &= rs[2].scale(16) == Poly.from_roots([-3, -7])
    dt = time.perf_counter() - t0
    ok = rep.passed and base_ok
    assert verdict(4, f"{family.upper()}_n real-rooted with strict interlacing, n <= 50", ok,
                   f"{dt:.1f}s, {len(rep.failures)} failures"), rep.failures


def test_c5_liu_wang(verdict):
    q_ok = all(check_liu_wang_side_conditions(bm.recurrence_coeffs("q", n)) for n in range(1, 51))
    r1 = bm.recurrence_coeffs("r", 1)
    control = r1.c == Poly([Fraction(15, 32)]) and not check_liu_wang_side_conditions(r1)
    r_ok = all(check_liu_wang_side_conditions(bm.recurrence_coeffs("r", n)) for n in range(3, 51))
    rep = verify_liu_wang(50)
    ok = q_ok and control and r_ok and rep.passed and 1 in [f.n for f in rep.expected_failures]
    assert verdict(5, "side conditions: Q for 1..50, R fails at n=1, R for 3..50", ok)


def test_c6_log_concavity(verdict):
    t0 = time.perf_counter()
    low = verify_k_logconcavity(60, 3)
    high = verify_k_logconcavity(40, 5)
    dt = time.perf_counter() - t0
    ok = low.passed and high.passed and dt < 300
    assert verdict(6, "L^2, L^3 nonnegative for n <= 60; L^k, k <= 5 for n <= 40", ok, f"{dt:.2f}s")
    # a non-example keeps the check honest
    assert not k_log_concave([1, 1, 1], 2).holds


def test_c7_proof_identities(verdict):
    rep = verify_coefficient_identities(50)
    assert verdict(7, "rec1, rec2, eq-inter-q, eq-new, eq-inter exact for n <= 50", rep.passed,
                   f"{rep.checks} instances"), rep.failures


def test_c8_branden_property(verdict):
    rep = branden_random_property(200, 12, seed=42)
    assert verdict(8, "L-transform of 200 seeded real-rooted polynomials is real-rooted", rep.passed), rep.failures


def _sign(v):
    return (v > 0) - (v < 0)


def test_c9_sturm_oracle(verdict):
    rng = random.Random(2024)
    bad = []
    for trial in range(100):
        deg = rng.randint(1, 10)
        pool = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(deg)]
        roots = [rng.choice(pool) for _ in range(deg)]      # repeats on purpose
        f = Poly.from_roots(roots, lead=Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4)))
        expected = len(set(roots))
        ivs = isolate_real_roots(f)
        s = squarefree_part(f)
        regions_ok = all(
            evaluate(f, iv.lo) == 0 if iv.is_point
            else iv.lo < iv.hi and _sign(evaluate(s, iv.lo)) * _sign(evaluate(s, iv.hi)) == -1
            for iv in ivs)
        disjoint = all(a.hi < b.lo or (a.hi == b.lo and not (a.is_point or b.is_point)) for a, b in zip(ivs, ivs[1:]))
        each_root_once = all(sum(iv.lo <= r <= iv.hi for iv in ivs) == 1 for r in set(roots))
        if not (count_real_roots(f) == expected == len(ivs) and regions_ok and disjoint and each_root_once):
            bad.append(trial)
    assert verdict(9, "count and isolation on 100 random rational products", not bad, f"bad trials {bad}" if bad else "")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
